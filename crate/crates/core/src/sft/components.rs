//! Strongly connected components and the transitive pieces of an SFT.

use crate::error::Result;
use crate::sft::spectral::{power_iterate, POWER_MAX_ITERATIONS};
use crate::sft::TransitionMatrix;

/// A transitive piece of the shift: a strongly connected component with at
/// least one internal edge, its restricted matrix, and its entropy.
#[derive(Debug, Clone)]
pub struct SftComponent {
    pub symbols: Vec<usize>,
    pub matrix: TransitionMatrix,
    pub lambda: f64,
    pub entropy: f64,
}

/// All strongly connected components (including edgeless singletons),
/// Kosaraju's algorithm with explicit stacks. Symbols within a component are
/// sorted ascending; the component list order is deterministic.
pub fn strongly_connected(a: &TransitionMatrix) -> Vec<Vec<usize>> {
    let d = a.size();
    let mut order = Vec::with_capacity(d);
    let mut seen = vec![false; d];
    for start in 0..d {
        if seen[start] {
            continue;
        }
        // iterative DFS recording finish order
        let mut stack = vec![(start, 0usize)];
        seen[start] = true;
        while let Some(&mut (node, ref mut next)) = stack.last_mut() {
            let mut advanced = false;
            while *next < d {
                let j = *next;
                *next += 1;
                if a.get(node, j) && !seen[j] {
                    seen[j] = true;
                    stack.push((j, 0));
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                order.push(node);
                stack.pop();
            }
        }
    }

    let rev = a.transpose();
    let mut comp = vec![usize::MAX; d];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    while let Some(root) = order.pop() {
        if comp[root] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![root];
        comp[root] = id;
        let mut stack = vec![root];
        while let Some(node) = stack.pop() {
            for j in 0..d {
                if rev.get(node, j) && comp[j] == usize::MAX {
                    comp[j] = id;
                    members.push(j);
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    comps
}

pub fn is_irreducible(a: &TransitionMatrix) -> bool {
    a.edge_count() > 0 && strongly_connected(a).len() == 1
}

/// Strongly connected components carrying at least one internal edge, each
/// with its restricted matrix and entropy, sorted by entropy descending
/// (ties by smallest symbol). Transient single symbols are excluded; they
/// support no invariant measure.
pub fn irreducible_components(a: &TransitionMatrix) -> Result<Vec<SftComponent>> {
    let mut out = Vec::new();
    for symbols in strongly_connected(a) {
        let matrix = a.restrict(&symbols)?;
        if matrix.edge_count() == 0 {
            continue;
        }
        let (lambda, _, _, _) = power_iterate(&matrix, POWER_MAX_ITERATIONS)?;
        out.push(SftComponent {
            entropy: lambda.ln(),
            lambda,
            symbols,
            matrix,
        });
    }
    out.sort_by(|x, y| {
        y.entropy
            .partial_cmp(&x.entropy)
            .unwrap()
            .then(x.symbols[0].cmp(&y.symbols[0]))
    });
    Ok(out)
}
