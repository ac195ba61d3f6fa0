//! Log-domain arithmetic for partition sums that span hundreds of orders of
//! magnitude. All reductions run in a fixed order so repeated runs produce
//! bit-identical results.

use num_bigint::BigUint;

/// log(exp(a) + exp(b)) computed without leaving the log domain.
pub fn log_add(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp().ln_1p()
}

/// log of a sum of exponentials, reduced in slice order.
pub fn log_sum_exp(xs: &[f64]) -> f64 {
    let mut max = f64::NEG_INFINITY;
    for &x in xs {
        if x > max {
            max = x;
        }
    }
    if max == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    let mut acc = 0.0;
    for &x in xs {
        acc += (x - max).exp();
    }
    max + acc.ln()
}

/// Natural log of a big integer. Stays accurate for values far beyond the
/// f64 range by splitting into a 63-bit mantissa and a power of two.
pub fn big_ln(value: &BigUint) -> f64 {
    let bits = value.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 63 {
        let v = u64::try_from(value).expect("fits in 63 bits");
        return (v as f64).ln();
    }
    let shift = bits - 63;
    let top = u64::try_from(&(value >> shift)).expect("shifted to 63 bits");
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// Compensated (Kahan) sum; used by brute-force oracles where plain
/// accumulation would drift above the comparison tolerances.
pub fn kahan_sum(xs: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut carry = 0.0;
    for x in xs {
        let y = x - carry;
        let t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn log_add_matches_direct() {
        let got = log_add(0.5f64.ln(), 0.25f64.ln());
        assert!((got - 0.75f64.ln()).abs() < 1e-15);
        assert_eq!(log_add(f64::NEG_INFINITY, -1.0), -1.0);
        assert_eq!(log_add(-1.0, f64::NEG_INFINITY), -1.0);
    }

    #[test]
    fn log_sum_exp_matches_direct() {
        let xs = [-1.0, -2.0, -3.0, f64::NEG_INFINITY];
        let direct: f64 = xs.iter().map(|x| x.exp()).sum();
        assert!((log_sum_exp(&xs) - direct.ln()).abs() < 1e-14);
        assert_eq!(log_sum_exp(&[]), f64::NEG_INFINITY);
    }

    #[test]
    fn big_ln_handles_values_beyond_f64() {
        let v = BigUint::from(3u32).pow(1000);
        let expect = 1000.0 * 3f64.ln();
        assert!((big_ln(&v) - expect).abs() / expect < 1e-14);
        assert_eq!(big_ln(&BigUint::from(0u32)), f64::NEG_INFINITY);
        assert!((big_ln(&BigUint::from(1024u32)) - 1024f64.ln()).abs() < 1e-14);
    }
}
