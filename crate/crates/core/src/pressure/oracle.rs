//! Brute-force reference computations: enumerate every ambient word,
//! rebuild each cylinder supremum position by position, and sum with
//! compensation. Exponential in the word length; the callers cap the sizes.
//! These deliberately share no code with the dynamic programs they check.

use crate::error::{Error, Result};
use crate::logdomain::kahan_sum;
use crate::roof::RoofSpec;

fn for_each_ambient_word(spec: &RoofSpec, n: usize, mut f: impl FnMut(&[usize])) {
    let d = spec.ambient_size();
    let mut word = vec![0usize; n];
    'outer: loop {
        if word.windows(2).all(|p| spec.ambient().get(p[0], p[1])) {
            f(&word);
        }
        for slot in word.iter_mut() {
            *slot += 1;
            if *slot < d {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
}

/// log Z_n by full enumeration.
pub fn naive_partition_sum(spec: &RoofSpec, n: usize, scale: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let mut terms = Vec::new();
    let mut failure = None;
    for_each_ambient_word(spec, n, |word| {
        let mut acc = 0.0;
        for i in 1..=n {
            let mut t = None;
            for u in i..n {
                if !spec.target().get(word[u - 1], word[u]) {
                    t = Some(u);
                    break;
                }
            }
            if t.is_none() && !spec.target().row_has_one(word[n - 1]) {
                t = Some(n);
            }
            match t {
                Some(t) => match spec.a_value(t - i + 1) {
                    Ok(a) => acc -= a,
                    Err(e) => {
                        failure = Some(e);
                        return;
                    }
                },
                None => acc -= spec.h_y(),
            }
        }
        terms.push((scale * acc).exp());
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(kahan_sum(terms).ln())
}

/// Q(r) by full enumeration, closing each prefix with the given successor
/// map and scanning the Birkhoff sum on the concatenated word. Every
/// position up to r sees its violation within the r + 1 available symbols,
/// so the value is exact.
pub fn naive_q_value_with_beta(
    spec: &RoofSpec,
    r: usize,
    scale: f64,
    beta: &[Option<usize>],
) -> Result<f64> {
    if r == 0 {
        return Err(Error::EmptyWord);
    }
    let mut terms = Vec::new();
    let mut failure = None;
    for_each_ambient_word(spec, r, |word| {
        let Some(b) = beta[word[r - 1]] else {
            return;
        };
        let mut full = word.to_vec();
        full.push(b);
        let mut acc = 0.0;
        for i in 1..=r {
            let mut t = 0;
            for u in i..=r {
                if !spec.target().get(full[u - 1], full[u]) {
                    t = u;
                    break;
                }
            }
            debug_assert!(t >= i, "position r is always a violation");
            match spec.a_value(t - i + 1) {
                Ok(a) => acc -= a,
                Err(e) => {
                    failure = Some(e);
                    return;
                }
            }
        }
        terms.push((scale * acc).exp());
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(kahan_sum(terms))
}

/// Q(r) by full enumeration with the spec's own successor map.
pub fn naive_q_value(spec: &RoofSpec, r: usize, scale: f64) -> Result<f64> {
    naive_q_value_with_beta(spec, r, scale, spec.beta())
}
