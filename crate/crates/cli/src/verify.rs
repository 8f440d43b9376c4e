//! The `verify` subcommand: re-derives the closed-form identities and the
//! construction counts, printing one line per check. Returns the number of
//! failed checks. Output carries no timestamps or durations, so identical
//! arguments and seed give byte-identical output.

use num_bigint::BigInt;
use num_traits::Signed;

use crossnum_core::bounds_search::{counting_bound, flag_extrapolation, minimize_crossings};
use crossnum_core::constructions::{alternating_3line, convex_max, two_line};
use crossnum_core::exact_geom::count_crossings;
use crossnum_core::formulas::{
    bound_a, bound_a3l, crmax, floor_identity_a, floor_identity_ab, known_small_cr,
    s_asymptotic_ratio, zarankiewicz_z, zeta,
};
use crossnum_core::scalar::{parse_ratio, ratio_to_f64, ExactScalar};
use crossnum_core::spherical::{monte_carlo_s, ratio_to_max};

type Check = Result<String, String>;

pub fn run_suite(quick: bool, seed: u64) -> usize {
    let mut failures = 0;
    let mut report = |name: &str, outcome: Check| match outcome {
        Ok(detail) => println!("  ok  {name:<24} {detail}"),
        Err(detail) => {
            failures += 1;
            println!("FAIL  {name:<24} {detail}");
        }
    };

    report("A == A_3L", a_equals_a3l(if quick { 20 } else { 50 }));
    report("small-case formulas", small_cases(if quick { 200 } else { 1000 }));
    report("zeta identities", zeta_identities());
    report("floor identities", floor_identities(if quick { 1000 } else { 5000 }));
    report("alternating drawings", alternating_counts(if quick { 4 } else { 6 }, !quick));
    report("2-line drawings", two_line_counts(if quick { 6 } else { 10 }));
    report("convex drawings", convex_counts(if quick { 3 } else { 4 }, if quick { 2 } else { 3 }));
    report("counting bound", counting_bound_check(if quick { 500 } else { 2000 }));
    report("flag extrapolation", flag_check());
    report("pair-crossing rate", pair_probability(seed, if quick { 20_000 } else { 100_000 }));
    report("spherical ratio limit", ratio_limit());
    report("search sanity", search_sanity(seed, quick));
    failures
}

fn a_equals_a3l(max: u64) -> Check {
    for n1 in 1..=max {
        for n2 in 1..=max {
            for n3 in 1..=max {
                if bound_a(n1, n2, n3) != bound_a3l(n1, n2, n3) {
                    return Err(format!("mismatch at ({n1},{n2},{n3})"));
                }
            }
        }
    }
    Ok(format!("equal on all triples with ni <= {max}"))
}

fn small_cases(max: u64) -> Check {
    for n in 1..=max {
        for (a, b) in [(1, 3), (2, 3), (1, 4), (2, 4)] {
            if known_small_cr(a, b, n).expect("known family") != bound_a(a, b, n) {
                return Err(format!("family ({a},{b},n) differs from A at n={n}"));
            }
        }
    }
    Ok(format!("all four families match A for n <= {max}"))
}

fn zeta_identities() -> Check {
    let quarter = ExactScalar::new(1.into(), 4.into());
    let three_eighths = ExactScalar::new(3.into(), 8.into());
    if zeta(2) != quarter || zeta(3) != quarter {
        return Err("zeta(2) or zeta(3) is not 1/4".into());
    }
    let mut prev = zeta(3);
    for r in 4..=200 {
        let z = zeta(r);
        if z <= prev {
            return Err(format!("zeta not strictly increasing at r={r}"));
        }
        if z >= three_eighths {
            return Err(format!("zeta(r) >= 3/8 at r={r}"));
        }
        prev = z;
    }
    for r in 2..=100 {
        if s_asymptotic_ratio(r) != zeta(r) {
            return Err(format!("type-probability ratio != zeta at r={r}"));
        }
    }
    let tail_gap = ratio_to_f64(&(three_eighths - zeta(1_000_000)));
    if !(0.0..1e-5).contains(&tail_gap) {
        return Err(format!("zeta(10^6) is {tail_gap} away from 3/8"));
    }
    Ok("1/4 = zeta(2) = zeta(3) < ... < 3/8; ratio identity holds for r <= 100".into())
}

fn floor_identities(max: u64) -> Check {
    for a in 0..=max {
        if !floor_identity_a(a) {
            return Err(format!("pair-count identity fails at a={a}"));
        }
    }
    for a in 0..=150 {
        for b in 0..=150 {
            if !floor_identity_ab(a, b) {
                return Err(format!("product identity fails at ({a},{b})"));
            }
        }
    }
    Ok(format!("hold for a <= {max} and all (a,b) <= 150"))
}

fn alternating_counts(max: usize, include_k555: bool) -> Check {
    for n1 in 1..=max {
        for n2 in 1..=max {
            for n3 in 1..=max {
                let total = match count_crossings(&alternating_3line(n1, n2, n3)) {
                    Ok(rep) => rep.total,
                    Err(e) => return Err(format!("degenerate drawing at ({n1},{n2},{n3}): {e}")),
                };
                if BigInt::from(total) != bound_a(n1 as u64, n2 as u64, n3 as u64) {
                    return Err(format!("count != A at ({n1},{n2},{n3})"));
                }
            }
        }
    }
    if include_k555 {
        let k555 = count_crossings(&alternating_3line(5, 5, 5)).map_err(|e| e.to_string())?;
        if k555.total != 192 {
            return Err(format!("K_{{5,5,5}} gave {} crossings, expected 192", k555.total));
        }
    }
    Ok(format!("count == A for all ni <= {max}"))
}

fn two_line_counts(max: usize) -> Check {
    for n in 1..=max {
        for m in 1..=max {
            let total = count_crossings(&two_line(n, m)).map_err(|e| e.to_string())?.total;
            if BigInt::from(total) != zarankiewicz_z(n as u64, m as u64) {
                return Err(format!("count != Z at ({n},{m})"));
            }
        }
    }
    Ok(format!("count == Z for n,m <= {max}"))
}

fn convex_counts(rmax: usize, nmax: usize) -> Check {
    for r in 2..=rmax {
        for n in 1..=nmax {
            if r * n < 3 {
                continue;
            }
            let total = count_crossings(&convex_max(r, n)).map_err(|e| e.to_string())?.total;
            if BigInt::from(total) != crmax(r as u64, n as u64) {
                return Err(format!("count != CR-max at (r={r},n={n})"));
            }
        }
    }
    Ok(format!("count == CR-max for r <= {rmax}, n <= {nmax}"))
}

fn counting_bound_check(n_big: u64) -> Check {
    let two_thirds = ExactScalar::new(2.into(), 3.into());
    let tol = ExactScalar::new(1.into(), 100.into());
    let ratio = counting_bound(n_big).ratio_to_a;
    if (ratio.clone() - &two_thirds).abs() >= tol {
        return Err(format!("ratio at n={n_big} is {}", ratio_to_f64(&ratio)));
    }
    let mut samples = vec![50, 100, 500];
    if n_big > 500 {
        samples.push(n_big);
    }
    let mut prev_gap: Option<ExactScalar> = None;
    for n in samples {
        let r = counting_bound(n).ratio_to_a;
        if r > &two_thirds + &tol {
            return Err(format!("ratio exceeds 2/3 + 1e-2 at n={n}"));
        }
        let gap = (r - &two_thirds).abs();
        if let Some(p) = &prev_gap {
            if &gap >= p {
                return Err(format!("approach to 2/3 not monotone at n={n}"));
            }
        }
        prev_gap = Some(gap);
    }
    Ok(format!(
        "ratio at n={n_big} is {:.6}, approaching 2/3 from above",
        ratio_to_f64(&ratio)
    ))
}

fn flag_check() -> Check {
    let coeff = flag_extrapolation(&parse_ratio("5.6767").expect("literal"));
    if coeff <= parse_ratio("0.973").expect("literal") {
        return Err(format!("6*5.6767/35 = {} is not above 0.973", ratio_to_f64(&coeff)));
    }
    let refined = flag_extrapolation(&ExactScalar::new(
        BigInt::from(1_419_186_177_261u64),
        BigInt::from(250_000_000_000u64),
    ));
    if refined <= parse_ratio("0.9731").expect("literal") {
        return Err("rational refinement does not clear 0.9731".into());
    }
    Ok(format!("6c/35 = {:.6} > 0.973", ratio_to_f64(&coeff)))
}

/// K_{2,2} has exactly two disjoint edge pairs, so the Monte Carlo mean over
/// random geodesic drawings is twice the pair-crossing probability.
fn pair_probability(seed: u64, trials: u64) -> Check {
    let est = monte_carlo_s(2, 2, trials, seed);
    let dev = (est.mean - 0.25).abs();
    if dev > 4.0 * est.std_error {
        return Err(format!(
            "mean {:.6} deviates from 0.25 by more than 4 standard errors ({:.6})",
            est.mean,
            4.0 * est.std_error
        ));
    }
    Ok(format!(
        "per-pair rate {:.5} vs 1/8 over {trials} trials (seed {seed})",
        est.mean / 2.0
    ))
}

fn ratio_limit() -> Check {
    let quarter = ExactScalar::new(1.into(), 4.into());
    for n in [7u64, 63, 400] {
        if ratio_to_max(2, n).expect("crmax > 0") != quarter {
            return Err(format!("bipartite ratio is not exactly 1/4 at n={n}"));
        }
    }
    let tol = ExactScalar::new(1.into(), 1000.into());
    for r in 2..=6u64 {
        let gap = (ratio_to_max(r, 400).expect("crmax > 0") - zeta(r)).abs();
        if gap >= tol {
            return Err(format!("|ratio - zeta| at (r={r}, n=400) is {}", ratio_to_f64(&gap)));
        }
    }
    Ok("exact 1/4 for r=2; within 1e-3 of zeta(r) at n=400 for r <= 6".into())
}

fn search_sanity(seed: u64, quick: bool) -> Check {
    let (iters, restarts) = if quick { (2_000, 2) } else { (20_000, 4) };
    let planar = minimize_crossings(&[2, 2, 2], iters, restarts, seed);
    if planar.best_count != 0 {
        return Err(format!("K_{{2,2,2}} search stopped at {}", planar.best_count));
    }
    let k223 = minimize_crossings(&[2, 2, 3], iters, restarts, seed);
    if k223.best_count != 2 {
        return Err(format!("K_{{2,2,3}} search stopped at {}", k223.best_count));
    }
    Ok(format!(
        "0 crossings for K_{{2,2,2}} and 2 for K_{{2,2,3}} (seed {seed}, {restarts}x{iters})"
    ))
}
