//! Closed-form crossing-number quantities, evaluated exactly.
//!
//! Integer-valued bounds are returned as `BigInt` so no parameter range can
//! overflow; ratio-valued quantities are [`ExactScalar`]s.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::ExactScalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("no known crossing-number formula for the family K_{{{0},{1},n}}")]
    UnknownFamily(u64, u64),
}

fn fl(n: u64) -> u64 {
    n / 2
}

fn ce(n: u64) -> u64 {
    n.div_ceil(2)
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

fn choose2(n: u64) -> BigInt {
    big(n) * big(n.saturating_sub(1)) / 2
}

/// Zarankiewicz bound `Z(n,m) = ⌊n/2⌋⌊(n−1)/2⌋⌊m/2⌋⌊(m−1)/2⌋` for `K_{n,m}`.
pub fn zarankiewicz_z(n: u64, m: u64) -> BigInt {
    big(fl(n)) * big(fl(n.saturating_sub(1))) * big(fl(m)) * big(fl(m.saturating_sub(1)))
}

/// Hill bound `H(n) = (1/4)⌊n/2⌋⌊(n−1)/2⌋⌊(n−2)/2⌋⌊(n−3)/2⌋` for `K_n`.
/// The floor product is always divisible by 4, so the result is an integer.
pub fn hill_h(n: u64) -> BigInt {
    let p = big(fl(n))
        * big(fl(n.saturating_sub(1)))
        * big(fl(n.saturating_sub(2)))
        * big(fl(n.saturating_sub(3)));
    p / 4
}

/// The tripartite analogue of the Zarankiewicz bound:
///
/// `A(n1,n2,n3) = Σ_i [ Z(nj,nk) + ⌊ni/2⌋⌊(ni−1)/2⌋⌊nj·nk/2⌋ ]`
///
/// summed over `i ∈ {1,2,3}` with `{j,k}` the complementary pair.
pub fn bound_a(n1: u64, n2: u64, n3: u64) -> BigInt {
    let ns = [n1, n2, n3];
    let mut sum = BigInt::zero();
    for i in 0..3 {
        let (j, k) = complement(i);
        let (ni, nj, nk) = (ns[i], ns[j], ns[k]);
        sum += zarankiewicz_z(nj, nk);
        sum += big(fl(ni)) * big(fl(ni - 1)) * big(nj * nk / 2);
    }
    sum
}

/// The ray-by-ray form of the same bound, counting an alternating 3-line
/// drawing: per `i`, all four products of "pair on a large/small ray of line
/// j" times "pair on a large/small ray of line k", plus the (2,1,1) term.
/// Identical to [`bound_a`] for all inputs.
pub fn bound_a3l(n1: u64, n2: u64, n3: u64) -> BigInt {
    let (b22, b211) = a3l_brackets(n1, n2, n3);
    b22 + b211
}

/// The two summands of [`bound_a3l`]: crossings whose four endpoints are
/// split (2,2) across the partite sets, and crossings split (2,1,1).
pub fn a3l_brackets(n1: u64, n2: u64, n3: u64) -> (BigInt, BigInt) {
    let ns = [n1, n2, n3];
    let mut b22 = BigInt::zero();
    let mut b211 = BigInt::zero();
    for i in 0..3 {
        let (j, k) = complement(i);
        let (ni, nj, nk) = (ns[i], ns[j], ns[k]);
        let (cj, fj) = (choose2(ce(nj)), choose2(fl(nj)));
        let (ck, fk) = (choose2(ce(nk)), choose2(fl(nk)));
        b22 += &cj * &ck + &cj * &fk + &fj * &ck + &fj * &fk;
        b211 += (choose2(ce(ni)) + choose2(fl(ni))) * big(fl(nj) * ce(nk) + ce(nj) * fl(nk));
    }
    (b22, b211)
}

fn complement(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// Maximum crossing number of the balanced complete r-partite graph on parts
/// of size n, realized by convex position with consecutive partite blocks:
///
/// `CR-max(r,n) = C(r,2)C(n,2)² + r·C(r−1,2)C(n,2)n² + C(r,4)n⁴`.
pub fn crmax(r: u64, n: u64) -> BigInt {
    assert!(r >= 2, "crmax requires r >= 2");
    let n2 = choose2(n);
    binomial(big(r), big(2)) * &n2 * &n2
        + big(r) * binomial(big(r - 1), big(2)) * &n2 * big(n) * big(n)
        + binomial(big(r), big(4)) * big(n).pow(4)
}

/// `ζ(r) = 3(r²−r) / (8(r²+r−3))`, the limit of expected-over-maximum
/// crossings for random geodesic drawings of balanced r-partite graphs.
pub fn zeta(r: u64) -> ExactScalar {
    assert!(r >= 2, "zeta requires r >= 2");
    let r = big(r);
    let num = 3 * (&r * &r - &r);
    let den = 8 * (&r * &r + &r - 3);
    ExactScalar::new(num, den)
}

/// Asymptotic probabilities that four uniformly random vertices of a large
/// balanced r-partite graph span 0, 2, or 3 disjoint edge pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeProbabilities {
    /// Partition shapes (4) and (3,1): no disjoint edge pair.
    pub alpha: ExactScalar,
    /// Partition shapes (2,2) and (2,1,1): two disjoint edge pairs.
    pub beta: ExactScalar,
    /// Partition shape (1,1,1,1): three disjoint edge pairs.
    pub gamma: ExactScalar,
}

/// `α = (4r−3)/r³`, `γ = (r−1)(r−2)(r−3)/r³`, `β = 1 − α − γ`.
pub fn type_probabilities(r: u64) -> TypeProbabilities {
    assert!(r >= 2, "type_probabilities requires r >= 2");
    let r3 = big(r).pow(3);
    let alpha = ExactScalar::new(big(4 * r - 3), r3.clone());
    let gamma = ExactScalar::new(big(r - 1) * big(r - 2) * (big(r) - 3), r3);
    let beta = ExactScalar::one() - &alpha - &gamma;
    TypeProbabilities { alpha, beta, gamma }
}

/// `(1/8)(2 + γ − 2α)/(1 − α)`: the expected-over-maximum crossing ratio
/// written through the four-point type probabilities. Equal to [`zeta`] for
/// every `r ≥ 2`.
pub fn s_asymptotic_ratio(r: u64) -> ExactScalar {
    let TypeProbabilities { alpha, gamma, .. } = type_probabilities(r);
    let two = ExactScalar::from_integer(2.into());
    let num = &two + &gamma - &two * &alpha;
    let den = ExactScalar::one() - &alpha;
    num / den / ExactScalar::from_integer(8.into())
}

/// Known exact crossing numbers of `K_{a,b,n}` for the four small families
/// `(a,b) ∈ {(1,3), (2,3), (1,4), (2,4)}`.
pub fn known_small_cr(a: u64, b: u64, n: u64) -> Result<BigInt, FormulaError> {
    let zz = big(fl(n)) * big(fl(n.saturating_sub(1)));
    match (a, b) {
        (1, 3) => Ok(2 * zz + big(fl(n))),
        (2, 3) => Ok(4 * zz + big(n)),
        (1, 4) => Ok(big(n) * big(n.saturating_sub(1))),
        (2, 4) => Ok(6 * zz + 2 * big(n)),
        _ => Err(FormulaError::UnknownFamily(a, b)),
    }
}

/// `C(⌈a/2⌉,2) + C(⌊a/2⌋,2) = ⌊a/2⌋⌊(a−1)/2⌋`, checked exactly.
pub fn floor_identity_a(a: u64) -> bool {
    choose2(ce(a)) + choose2(fl(a)) == big(fl(a)) * big(fl(a.saturating_sub(1)))
}

/// `⌊a/2⌋⌈b/2⌉ + ⌈a/2⌉⌊b/2⌋ = ⌊ab/2⌋`, checked exactly.
pub fn floor_identity_ab(a: u64, b: u64) -> bool {
    big(fl(a)) * big(ce(b)) + big(ce(a)) * big(fl(b)) == big(a) * big(b) / 2
}

/// Named closed-form values for one parameter profile.
#[derive(Debug, Clone)]
pub struct BoundTable {
    /// The part sizes the table was computed for.
    pub parameters: Vec<u64>,
    /// Entries in fixed presentation order (`Z`, `H`, `A`, `A_3L`, `CRmax`,
    /// `zeta`, `alpha`, `beta`, `gamma`, `s_asym`); only the ones that apply
    /// to the profile are present.
    pub entries: Vec<(&'static str, ExactScalar)>,
}

/// Evaluates every named bound that applies to the given part-size profile:
/// `Z` for bipartite profiles, `A`/`A_3L` for tripartite ones, and the
/// balanced-graph quantities (`CRmax`, `zeta`, `alpha`, `beta`, `gamma`,
/// `s_asym`, plus `H` when all parts have size 1) whenever all sizes agree.
pub fn bound_table(sizes: &[u64]) -> BoundTable {
    let int = |v: BigInt| ExactScalar::from_integer(v);
    let mut entries: Vec<(&'static str, ExactScalar)> = Vec::new();
    if sizes.len() == 2 {
        entries.push(("Z", int(zarankiewicz_z(sizes[0], sizes[1]))));
    }
    let balanced = sizes.len() >= 2 && sizes.iter().all(|&s| s == sizes[0]);
    if balanced && sizes[0] == 1 {
        entries.push(("H", int(hill_h(sizes.len() as u64))));
    }
    if sizes.len() == 3 {
        entries.push(("A", int(bound_a(sizes[0], sizes[1], sizes[2]))));
        entries.push(("A_3L", int(bound_a3l(sizes[0], sizes[1], sizes[2]))));
    }
    if balanced {
        let r = sizes.len() as u64;
        let probs = type_probabilities(r);
        entries.push(("CRmax", int(crmax(r, sizes[0]))));
        entries.push(("zeta", zeta(r)));
        entries.push(("alpha", probs.alpha));
        entries.push(("beta", probs.beta));
        entries.push(("gamma", probs.gamma));
        entries.push(("s_asym", s_asymptotic_ratio(r)));
    }
    BoundTable {
        parameters: sizes.to_vec(),
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{Signed, ToPrimitive};

    fn rat(n: i64, d: i64) -> ExactScalar {
        ExactScalar::new(n.into(), d.into())
    }

    #[test]
    fn zarankiewicz_small_cases() {
        assert_eq!(zarankiewicz_z(3, 3), big(1));
        for m in 0..20 {
            assert_eq!(zarankiewicz_z(1, m), BigInt::zero());
        }
        assert_eq!(zarankiewicz_z(5, 5), big(16));
        assert_eq!(zarankiewicz_z(4, 5), big(8));
        assert_eq!(zarankiewicz_z(0, 7), BigInt::zero());
    }

    #[test]
    fn hill_small_cases() {
        assert_eq!(hill_h(4), BigInt::zero());
        assert_eq!(hill_h(5), big(1));
        assert_eq!(hill_h(7), big(9));
        assert_eq!(hill_h(0), BigInt::zero());
    }

    #[test]
    fn bound_a_small_cases() {
        assert_eq!(bound_a(1, 1, 1), BigInt::zero());
        assert_eq!(bound_a(5, 5, 5), big(192));
        assert_eq!(bound_a(2, 2, 3), big(2));
    }

    #[test]
    fn bound_a3l_small_cases() {
        assert_eq!(bound_a3l(5, 5, 5), big(192));
        assert_eq!(bound_a3l(1, 1, 1), BigInt::zero());
        assert_eq!(bound_a3l(2, 2, 3), big(2));
    }

    #[test]
    fn a3l_brackets_sum_to_a3l() {
        let (b22, b211) = a3l_brackets(5, 5, 5);
        assert_eq!(b22, big(48));
        assert_eq!(b211, big(144));
    }

    #[test]
    fn crmax_small_cases() {
        for n in 1..20 {
            let c2 = choose2(n);
            assert_eq!(crmax(2, n), &c2 * &c2);
        }
        assert_eq!(crmax(3, 2), big(15));
        assert_eq!(crmax(4, 1), big(1));
        // CR-max of K_r in the r-parts-of-one encoding is C(r,4).
        for r in 2..10 {
            assert_eq!(crmax(r, 1), binomial(big(r), big(4)));
        }
    }

    #[test]
    fn zeta_values() {
        assert_eq!(zeta(2), rat(1, 4));
        assert_eq!(zeta(3), rat(1, 4));
        assert_eq!(zeta(4), rat(9, 34));
    }

    #[test]
    fn zeta_monotone_and_bounded() {
        let three_eighths = rat(3, 8);
        let mut prev = zeta(3);
        for r in 4..200 {
            let z = zeta(r);
            assert!(z > prev, "zeta must increase strictly for r >= 3");
            assert!(z < three_eighths);
            prev = z;
        }
        // Limit check far out: within 1e-5 of 3/8 at r = 10^6.
        let far = zeta(1_000_000);
        let gap = (three_eighths - far).to_f64().unwrap();
        assert!(gap > 0.0 && gap < 1e-5, "gap {gap}");
    }

    #[test]
    fn type_probabilities_values() {
        let p2 = type_probabilities(2);
        assert_eq!(p2.alpha, rat(5, 8));
        assert_eq!(p2.beta, rat(3, 8));
        assert_eq!(p2.gamma, rat(0, 1));
        let p3 = type_probabilities(3);
        assert_eq!(p3.alpha, rat(1, 3));
        assert_eq!(p3.beta, rat(2, 3));
        let p4 = type_probabilities(4);
        assert_eq!(p4.gamma, rat(3, 32));
        for r in 2..50 {
            let p = type_probabilities(r);
            assert_eq!(p.alpha + p.beta + p.gamma, ExactScalar::one());
        }
    }

    #[test]
    fn s_ratio_equals_zeta() {
        for r in 2..=100 {
            assert_eq!(s_asymptotic_ratio(r), zeta(r), "r = {r}");
        }
    }

    #[test]
    fn known_small_cr_cases() {
        assert_eq!(known_small_cr(2, 3, 2).unwrap(), big(2));
        assert_eq!(known_small_cr(1, 4, 3).unwrap(), big(6));
        assert_eq!(known_small_cr(1, 3, 1).unwrap(), BigInt::zero());
        assert!(matches!(
            known_small_cr(3, 3, 5),
            Err(FormulaError::UnknownFamily(3, 3))
        ));
    }

    #[test]
    fn known_small_cr_matches_bound_a() {
        for n in 1..=200 {
            assert_eq!(known_small_cr(1, 3, n).unwrap(), bound_a(1, 3, n));
            assert_eq!(known_small_cr(2, 3, n).unwrap(), bound_a(2, 3, n));
            assert_eq!(known_small_cr(1, 4, n).unwrap(), bound_a(1, 4, n));
            assert_eq!(known_small_cr(2, 4, n).unwrap(), bound_a(2, 4, n));
        }
    }

    #[test]
    fn floor_identities_small() {
        assert!(floor_identity_a(5));
        assert!(floor_identity_a(0));
        assert!(floor_identity_a(6));
        assert!(floor_identity_ab(3, 5));
        assert!(floor_identity_ab(7, 7));
        for b in 0..50 {
            assert!(floor_identity_ab(2, b));
        }
    }

    #[test]
    fn ratio_a_over_crmax_tends_to_quarter() {
        // lim A(n,n,n) / CR-max(3,n) = 1/4; exact ratio at n = 10^4.
        let n = 10_000u64;
        let ratio = ExactScalar::new(bound_a(n, n, n), crmax(3, n));
        let err = (ratio - rat(1, 4)).abs().to_f64().unwrap();
        assert!(err < 1e-3, "err {err}");
    }

    #[test]
    fn table_for_tripartite_profile() {
        let t = bound_table(&[5, 5, 5]);
        let names: Vec<_> = t.entries.iter().map(|(n, _)| *n).collect();
        assert_eq!(names, ["A", "A_3L", "CRmax", "zeta", "alpha", "beta", "gamma", "s_asym"]);
        assert_eq!(t.entries[0].1, ExactScalar::from_integer(192.into()));
    }

    #[test]
    fn table_for_bipartite_and_complete_profiles() {
        let t = bound_table(&[3, 3]);
        assert_eq!(t.entries[0], ("Z", ExactScalar::one()));
        let k5 = bound_table(&[1, 1, 1, 1, 1]);
        assert!(k5.entries.iter().any(|(n, v)| *n == "H" && *v == ExactScalar::one()));
    }
}
