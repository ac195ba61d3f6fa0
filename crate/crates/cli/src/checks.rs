//! The verification suite behind `shiftroof verify`: one named check per
//! invariant, each printed as a PASS/FAIL line. Any failure flips the exit
//! code to 1.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use shiftroof_core::logdomain::log_add;
use shiftroof_core::pressure::oracle::{naive_partition_sum, naive_q_value};
use shiftroof_core::pressure::{
    birkhoff_sum_bound, birkhoff_sup, partition_sum, pressure_estimate, pressure_root, q_table,
    q_value, sqrt_series_bound, variational_check, witness_tail, PartitionTable, QTable,
    RootResult,
};
use shiftroof_core::roof::block_index;
use shiftroof_core::sft::{irreducible_components, parry_measure};
use shiftroof_core::{RoofSpec, Word};

pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn ok(name: &'static str, detail: String) -> Check {
        Check {
            name,
            pass: true,
            detail,
        }
    }

    fn fail(name: &'static str, detail: String) -> Check {
        Check {
            name,
            pass: false,
            detail,
        }
    }
}

pub struct VerifyOutput {
    pub checks: Vec<Check>,
    pub q: QTable,
    pub partition: PartitionTable,
    pub partition_high: PartitionTable,
    pub root: RootResult,
}

pub struct VerifyConfig {
    pub n_max: usize,
    pub r_max: usize,
    pub tol: f64,
    pub oracle: bool,
}

const REL: f64 = 1e-12;

pub fn run_verify(spec: &RoofSpec, cfg: &VerifyConfig) -> shiftroof_core::Result<VerifyOutput> {
    let mut checks = Vec::new();
    let h = spec.h_y();
    let a1 = spec.a1();
    let j_max = spec.aj().j_max();

    // a_j bounds and monotone tail
    {
        let mut worst = f64::INFINITY;
        let mut pass = true;
        for j in 1..=j_max {
            let a = spec.a_value(j)?;
            worst = worst.min(a - h);
            if a < h - 1e-12 || a > a1 + 1e-12 {
                pass = false;
            }
        }
        for m in 0..j_max.saturating_sub(1) {
            if spec.tail_sup(m)? < spec.tail_sup(m + 1)? - 1e-15 {
                pass = false;
            }
        }
        checks.push(if pass {
            Check::ok(
                "aj_bounds",
                format!("a_j in [h, a_1] for j <= {j_max}; min gap {worst:.3e}"),
            )
        } else {
            Check::fail("aj_bounds", "a_j left [h(Y), a_1]".into())
        });
    }

    // exact block-sum identity
    {
        let mut worst = 0.0f64;
        for s in 1..=j_max {
            let n = block_index(s);
            let k = s - n * (n - 1) / 2;
            let mut rhs = 0.0;
            for m in 1..n {
                rhs += spec.language().log_count(m);
            }
            rhs += k as f64 / n as f64 * spec.language().log_count(n);
            let mut sqrt_sum = 0.0;
            for j in 1..=s {
                sqrt_sum += 1.0 / (j as f64).sqrt();
            }
            rhs += spec.c() * sqrt_sum;
            let lhs = spec.prefix_a(s)?;
            worst = worst.max((lhs - rhs).abs() / lhs.abs().max(1.0));
        }
        checks.push(if worst <= REL {
            Check::ok(
                "aj_block_sum_identity",
                format!("max relative defect {worst:.3e} over s <= {j_max}"),
            )
        } else {
            Check::fail(
                "aj_block_sum_identity",
                format!("relative defect {worst:.3e} exceeds {REL:.0e}"),
            )
        });
    }

    // lower-bound chain: sum a_j >= log |L_s| + c sum 1/sqrt(j) >= log |L_s| + c sqrt(s)
    {
        let s_max = j_max.min(spec.language().len());
        let mut pass = true;
        let mut min_slack = f64::INFINITY;
        for s in 1..=s_max {
            let lhs = spec.prefix_a(s)?;
            let log_l = spec.language().log_count(s);
            let mut sqrt_sum = 0.0;
            for j in 1..=s {
                sqrt_sum += 1.0 / (j as f64).sqrt();
            }
            let mid = log_l + spec.c() * sqrt_sum;
            let low = log_l + spec.c() * (s as f64).sqrt();
            let tol = REL * lhs.abs().max(1.0);
            if lhs < mid - tol || mid < low - tol {
                pass = false;
            }
            min_slack = min_slack.min(lhs - low);
        }
        checks.push(if pass {
            Check::ok(
                "aj_lower_bound_chain",
                format!("holds for s <= {s_max}; min slack over sqrt bound {min_slack:.3e}"),
            )
        } else {
            Check::fail("aj_lower_bound_chain", "chain violated".into())
        });
    }

    // Q(r) < 1 and the closed form at r = 1
    let q = q_table(spec, cfg.r_max, 1.0)?;
    {
        let max_q = q.rows.iter().map(|r| r.q).fold(0.0f64, f64::max);
        let pass = q.rows.iter().all(|r| r.q < 1.0);
        checks.push(if pass {
            Check::ok(
                "q_below_one",
                format!("max Q(r) = {max_q:.6e} over r <= {}", cfg.r_max),
            )
        } else {
            Check::fail("q_below_one", format!("max Q(r) = {max_q}"))
        });
        let a0 = spec.a_zero().len() as f64;
        let expect = a0 * (-spec.a1()).exp();
        let got = q.rows[0].q;
        checks.push(if (got - expect).abs() <= REL * expect.max(1e-300) {
            Check::ok("q_closed_form_r1", format!("Q(1) = {got:.12e}"))
        } else {
            Check::fail(
                "q_closed_form_r1",
                format!("Q(1) = {got:.12e}, closed form {expect:.12e}"),
            )
        });
    }

    // recursion consistency and the series tail
    {
        let pass = q
            .rows
            .iter()
            .filter(|r| r.r >= 2)
            .all(|r| r.q <= r.recursion_rhs + 1e-12);
        let series = sqrt_series_bound(spec.c());
        let series_ok = spec.c() < 2.0 || series < 0.5;
        checks.push(if pass && series_ok {
            Check::ok(
                "q_recursion",
                format!("Q(r) below recursion bound; series tail {series:.4e}"),
            )
        } else {
            Check::fail("q_recursion", format!("series tail {series:.4e}"))
        });
    }

    // pressure sandwich at scale 1
    let partition = pressure_estimate(spec, cfg.n_max, 1.0)?;
    let n_start = if spec.dead_symbols().is_empty() { 1 } else { 2 };
    {
        let mut pass = true;
        for row in &partition.rows {
            if row.n < n_start {
                continue;
            }
            let upper = (row.n as f64 * partition.c2).ln() / row.n as f64;
            if row.p < -1e-12 || row.p > upper + 1e-9 {
                pass = false;
            }
        }
        let last = partition.rows.last().unwrap();
        checks.push(if pass {
            Check::ok(
                "partition_sandwich",
                format!(
                    "0 <= P_n(1) <= log(n C2)/n for n in {n_start}..={}; P_{} = {:.6e}",
                    cfg.n_max, last.n, last.p
                ),
            )
        } else {
            Check::fail("partition_sandwich", "sandwich violated".into())
        });
    }

    // Z_n below the decomposition bound
    {
        let mut pass = true;
        let mut bound_log = f64::NEG_INFINITY;
        let log_lambda = spec.lambda().ln();
        for row in &partition.rows {
            let m = row.n;
            bound_log = log_add(
                bound_log,
                spec.language().log_count(m) - m as f64 * log_lambda,
            );
            if m < n_start {
                continue;
            }
            if row.log_z > bound_log + 1e-9 {
                pass = false;
            }
        }
        checks.push(if pass {
            Check::ok(
                "z_decomposition",
                format!(
                    "log Z_n <= log(sum ratios) for n in {n_start}..={}",
                    cfg.n_max
                ),
            )
        } else {
            Check::fail("z_decomposition", "decomposition bound violated".into())
        });
    }

    // strict monotonicity in the scale
    let partition_high = pressure_estimate(spec, cfg.n_max, 1.5)?;
    {
        let mut pass = true;
        for (lo, hi) in partition.rows.iter().zip(&partition_high.rows) {
            if !(hi.p < lo.p) || lo.p - hi.p < 0.5 * h - 1e-9 {
                pass = false;
            }
        }
        checks.push(if pass {
            Check::ok(
                "pressure_monotonicity",
                format!("P_n(1.5) < P_n(1) with gap >= 0.5 h for n <= {}", cfg.n_max),
            )
        } else {
            Check::fail("pressure_monotonicity", "monotonicity violated".into())
        });
    }

    // pressure root inside the a-priori enclosure
    let root = pressure_root(spec, cfg.n_max, None, cfg.tol)?;
    {
        let apriori = root.apriori.unwrap();
        let pass = root.root >= 1.0 - 1e-9
            && root.root <= apriori.hi + 1e-9
            && root.residual <= cfg.tol * h;
        checks.push(if pass {
            Check::ok(
                "root_enclosure",
                format!(
                    "c_{} = {:.12} in [1, {:.6}], residual {:.3e}",
                    cfg.n_max, root.root, apriori.hi, root.residual
                ),
            )
        } else {
            Check::fail(
                "root_enclosure",
                format!("root {} residual {:.3e}", root.root, root.residual),
            )
        });
    }

    // Parry measures of the maximal components
    {
        let comps = irreducible_components(spec.target())?;
        let rows = variational_check(spec, &comps);
        let mut pass = true;
        let mut max_station = 0.0f64;
        let mut max_entropy_res = 0.0f64;
        let mut max_var = 0.0f64;
        for (comp, row) in comps.iter().zip(&rows) {
            if !row.max_entropy {
                if row.slack <= 0.0 {
                    pass = false;
                }
                continue;
            }
            max_var = max_var.max(row.residual);
            let parry = parry_measure(&comp.matrix)?;
            max_station = max_station.max(parry.stationarity_residual());
            max_entropy_res = max_entropy_res.max((parry.entropy() - comp.entropy).abs());
        }
        if max_station > 1e-12 || max_entropy_res > 1e-10 || max_var > 1e-10 {
            pass = false;
        }
        checks.push(if pass {
            Check::ok(
                "parry_variational",
                format!(
                    "stationarity {max_station:.3e}, entropy residual {max_entropy_res:.3e}, variational {max_var:.3e}"
                ),
            )
        } else {
            Check::fail("parry_variational", "residuals above tolerance".into())
        });
    }

    // the successor map never moves Q
    {
        let choices: Vec<Vec<usize>> = (0..spec.ambient_size())
            .map(|i| {
                if spec.beta()[i].is_none() {
                    return Vec::new();
                }
                (0..spec.ambient_size())
                    .filter(|&j| spec.ambient().get(i, j) && !spec.target().get(i, j))
                    .collect()
            })
            .collect();
        let mut combos: u64 = 1;
        for c in choices.iter().filter(|c| !c.is_empty()) {
            combos = combos.saturating_mul(c.len() as u64).min(64);
        }
        let r_check = cfg.r_max.min(50);
        let reference: Vec<f64> = (1..=r_check)
            .map(|r| q_value(spec, r, 1.0))
            .collect::<shiftroof_core::Result<_>>()?;
        let mut pass = true;
        for combo in 0..combos {
            let mut idx = combo;
            let beta: Vec<Option<usize>> = choices
                .iter()
                .map(|c| {
                    if c.is_empty() {
                        None
                    } else {
                        let pick = (idx % c.len() as u64) as usize;
                        idx /= c.len() as u64;
                        Some(c[pick])
                    }
                })
                .collect();
            let respec = spec.with_beta(beta)?;
            for (r, &expect) in reference.iter().enumerate() {
                let got = q_value(&respec, r + 1, 1.0)?;
                if (got - expect).abs() > REL * expect.max(1e-300) {
                    pass = false;
                }
            }
        }
        checks.push(if pass {
            Check::ok(
                "beta_invariance",
                format!("{combos} successor maps, Q(r) identical for r <= {r_check}"),
            )
        } else {
            Check::fail("beta_invariance", "Q moved under a successor map".into())
        });
    }

    // witnesses attain the cylinder suprema, extensions never exceed them
    {
        let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
        let d = spec.ambient_size();
        let mut pass = true;
        for _ in 0..200 {
            let n = rng.gen_range(1..=12usize.min(j_max));
            let mut w = Vec::with_capacity(n);
            let mut at = rng.gen_range(0..d);
            w.push(at);
            while w.len() < n {
                let succ: Vec<usize> = (0..d).filter(|&j| spec.ambient().get(at, j)).collect();
                at = succ[rng.gen_range(0..succ.len())];
                w.push(at);
            }
            let sup = birkhoff_sup(spec, &Word::new(w.clone()), 1.0)?;
            let tol = REL * sup.value.abs().max(1.0);
            let tail = witness_tail(spec, sup.witness, 40);
            let mut full = w.clone();
            full.extend(tail);
            let attained = birkhoff_sum_bound(spec, &full, n, 1.0)?;
            if (attained - sup.value).abs() > tol {
                pass = false;
            }
            for _ in 0..50 {
                let mut ext = w.clone();
                let mut cur = *ext.last().unwrap();
                for _ in 0..30 {
                    let succ: Vec<usize> = (0..d).filter(|&j| spec.ambient().get(cur, j)).collect();
                    cur = succ[rng.gen_range(0..succ.len())];
                    ext.push(cur);
                }
                if birkhoff_sum_bound(spec, &ext, n, 1.0)? > sup.value + tol {
                    pass = false;
                }
            }
        }
        checks.push(if pass {
            Check::ok("witness_attainment", "200 words, 50 extensions each".into())
        } else {
            Check::fail("witness_attainment", "supremum mismatch".into())
        });
    }

    // optional brute-force cross-checks
    if cfg.oracle {
        let d = spec.ambient_size() as f64;
        let cap = (1e6f64.ln() / d.ln()).floor() as usize;
        let n_cap = cfg.n_max.min(cap).min(12);
        let r_cap = cfg.r_max.min(cap).min(8);
        let mut worst = 0.0f64;
        let mut pass = true;
        for n in 1..=n_cap {
            for scale in [1.0, 1.5] {
                let dp = partition_sum(spec, n, scale)?;
                let naive = naive_partition_sum(spec, n, scale)?;
                let err = ((dp - naive).exp() - 1.0).abs();
                worst = worst.max(err);
                if err > REL {
                    pass = false;
                }
            }
        }
        for r in 1..=r_cap {
            let dp = q_value(spec, r, 1.0)?;
            let naive = naive_q_value(spec, r, 1.0)?;
            let err = (dp - naive).abs() / naive.max(1e-300);
            worst = worst.max(err);
            if err > REL {
                pass = false;
            }
        }
        checks.push(if pass {
            Check::ok(
                "oracle_equivalence",
                format!("n <= {n_cap}, r <= {r_cap}, worst relative error {worst:.3e}"),
            )
        } else {
            Check::fail("oracle_equivalence", format!("worst error {worst:.3e}"))
        });
    }

    Ok(VerifyOutput {
        checks,
        q,
        partition,
        partition_high,
        root,
    })
}
