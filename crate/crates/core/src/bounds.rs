//! Exact evaluators for every named constant: the characteristic-extension
//! bound J, the conic-bundle constants over bases of genus 0, 1, and >= 2,
//! the del Pezzo constant, Hasse-Weil point-count intervals, gonality and
//! curve-automorphism bounds, and the p'-boundedness constants for groups of
//! birational permutations.
//!
//! Everything is arbitrary-precision integer or exact rational arithmetic.
//! The only irrational ingredient, sqrt(q), enters through the integer floor
//! sqrt: since the bounded quantities are integers, q + 1 +- floor(2g*sqrt q)
//! and 24(q + 1 + floor(2*sqrt q)) are valid (and slightly tighter) integer
//! forms of the real-valued expressions, and every report records that
//! rounding.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::int;
use crate::error::{Error, Result};

/// Exact value carried by a report: an integer or a rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundValue {
    Int(BigUint),
    Ratio(BigRational),
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Int(v) => write!(f, "{v}"),
            BoundValue::Ratio(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

/// A named constant, its exact value, the formula it instantiates, and the
/// inputs used. `rounding` is None for exact formulas and names the integer
/// square-root convention otherwise.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub name: &'static str,
    pub inputs: BTreeMap<&'static str, u64>,
    pub value: BoundValue,
    pub formula: &'static str,
    pub rounding: Option<&'static str>,
    /// Free-form extras such as the attaining branch of a maximum.
    pub notes: BTreeMap<&'static str, String>,
}

impl BoundReport {
    fn new(
        name: &'static str,
        inputs: &[(&'static str, u64)],
        value: BoundValue,
        formula: &'static str,
    ) -> Self {
        BoundReport {
            name,
            inputs: inputs.iter().copied().collect(),
            value,
            formula,
            rounding: None,
            notes: BTreeMap::new(),
        }
    }

    pub fn int_value(&self) -> &BigUint {
        match &self.value {
            BoundValue::Int(v) => v,
            BoundValue::Ratio(_) => panic!("report {} holds a rational", self.name),
        }
    }
}

fn require_prime_power(q: u64) -> Result<(u64, u32)> {
    int::prime_power(q).ok_or(Error::NotPrimePower(q))
}

fn pow(base: u64, exp: u64) -> BigUint {
    BigUint::from(base).pow(exp as u32)
}

/// max(q^k (q^{2k} - 1), 60): the index bound for finite automorphism groups
/// of a conic over a degree-k extension of a purely transcendental extension
/// of F_q.
pub fn char_bound(q: u64, k: u64) -> Result<BoundReport> {
    require_prime_power(q)?;
    if k < 1 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let value = (pow(q, k) * (pow(q, 2 * k) - 1u32)).max(BigUint::from(60u32));
    Ok(BoundReport::new(
        "char",
        &[("q", q), ("k", k)],
        BoundValue::Int(value),
        "max(q^k*(q^(2k)-1), 60)",
    ))
}

/// J_CB(C) = |Aut(C)| * max(q^k (q^{2k} - 1), 60) for a conic bundle over a
/// curve of gonality k.
pub fn conic_bundle_bound(q: u64, gonality: u64, aut_order: u64) -> Result<BoundReport> {
    if gonality < 1 || aut_order < 1 {
        return Err(Error::InvalidInput(
            "gonality and |Aut(C)| must be at least 1".into(),
        ));
    }
    let base = char_bound(q, gonality)?;
    let value = base.int_value() * aut_order;
    Ok(BoundReport::new(
        "jcb",
        &[("q", q), ("gonality", gonality), ("aut_order", aut_order)],
        BoundValue::Int(value),
        "|Aut(C)| * max(q^k*(q^(2k)-1), 60)",
    ))
}

/// Gonality bound by genus: 1 for g = 0, 2 for g = 1, 2g - 2 for g >= 2.
pub fn gonality_bound(g: u64) -> u64 {
    match g {
        0 => 1,
        1 => 2,
        g => 2 * g - 2,
    }
}

/// Integer Hasse-Weil window for the F_q-point count of a smooth genus-g
/// curve: [q + 1 - floor(2g sqrt q), q + 1 + floor(2g sqrt q)].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseWeilInterval {
    pub q: u64,
    pub g: u64,
    pub lo: BigUint,
    pub hi: BigUint,
    /// floor(2g sqrt q) = isqrt(4 g^2 q).
    pub sqrt_term: BigUint,
    /// True when q + 1 - sqrt_term would be negative and lo was clamped to 0.
    pub clamped_at_zero: bool,
}

pub fn hasse_weil_interval(q: u64, g: u64) -> Result<HasseWeilInterval> {
    require_prime_power(q)?;
    let four_g2_q = BigUint::from(4u32) * pow(g, 2) * q;
    let sqrt_term = int::isqrt(&four_g2_q);
    let center = BigInt::from(q) + 1;
    let lo_signed: BigInt = &center - BigInt::from(sqrt_term.clone());
    let (lo, clamped) = if lo_signed.is_negative() {
        (BigUint::zero(), true)
    } else {
        (lo_signed.to_biguint().expect("nonnegative"), false)
    };
    let hi_signed: BigInt = &center + BigInt::from(sqrt_term.clone());
    let hi = hi_signed.to_biguint().expect("nonnegative");
    Ok(HasseWeilInterval {
        q,
        g,
        lo,
        hi,
        sqrt_term,
        clamped_at_zero: clamped,
    })
}

impl HasseWeilInterval {
    pub fn contains(&self, n: u64) -> bool {
        let n = BigUint::from(n);
        self.lo <= n && n <= self.hi
    }

    pub fn to_report(&self) -> BoundReport {
        let mut r = BoundReport::new(
            "hasse-weil",
            &[("q", self.q), ("g", self.g)],
            BoundValue::Int(self.hi.clone()),
            "[q+1-floor(2g*sqrt(q)), q+1+floor(2g*sqrt(q))]",
        );
        r.rounding = Some("floor(2g*sqrt(q)) computed as isqrt(4g^2*q)");
        r.notes.insert("lo", self.lo.to_string());
        r.notes.insert("hi", self.hi.to_string());
        if self.clamped_at_zero {
            r.notes.insert("clamped_at_zero", "true".into());
        }
        r
    }
}

/// 24 (q + 1 + floor(2 sqrt q)): the automorphism bound for a genus-1 curve,
/// in integer form. The real-valued form 24(1 + q + 2 sqrt q) is recorded in
/// the notes; both bound the same integer quantity, the integer form tighter.
pub fn genus1_aut_bound(q: u64) -> Result<BoundReport> {
    require_prime_power(q)?;
    let sqrt_term = int::isqrt(&(BigUint::from(4u32) * q));
    let value = BigUint::from(24u32) * (BigUint::from(q) + 1u32 + &sqrt_term);
    let mut r = BoundReport::new(
        "genus1-aut",
        &[("q", q)],
        BoundValue::Int(value),
        "24*(q+1+floor(2*sqrt(q)))",
    );
    r.rounding = Some("floor(2*sqrt(q)) computed as isqrt(4q)");
    r.notes
        .insert("real_form", "24*(1+q+2*sqrt(q))".to_string());
    r.notes.insert("floor_2_sqrt_q", sqrt_term.to_string());
    Ok(r)
}

/// J_CB^0 = q(q^2-1) * max(q(q^2-1), 60): genus-0 base, where the base curve
/// is a projective line and Aut = PGL_2(F_q).
pub fn j_cb0(q: u64) -> Result<BoundReport> {
    require_prime_power(q)?;
    let pgl = pow(q, 1) * (pow(q, 2) - 1u32);
    let value = &pgl * char_bound(q, 1)?.int_value();
    Ok(BoundReport::new(
        "jcb0",
        &[("q", q)],
        BoundValue::Int(value),
        "q*(q^2-1) * max(q*(q^2-1), 60)",
    ))
}

/// J_CB^1 = 24(q+1+floor(2 sqrt q)) * max(q^2(q^4-1), 60): genus-1 base
/// (gonality 2).
pub fn j_cb1(q: u64) -> Result<BoundReport> {
    let aut = genus1_aut_bound(q)?;
    let value = aut.int_value() * char_bound(q, 2)?.int_value();
    let mut r = BoundReport::new(
        "jcb1",
        &[("q", q)],
        BoundValue::Int(value),
        "24*(q+1+floor(2*sqrt(q))) * max(q^2*(q^4-1), 60)",
    );
    r.rounding = aut.rounding;
    r.notes.insert(
        "real_form",
        "24*(1+q+2*sqrt(q)) * max(q^2*(q^4-1), 60)".to_string(),
    );
    Ok(r)
}

/// J_CB^{>=2} = 75 g^4 * max(q^{2g-2}(q^{4g-4}-1), 60): base of genus g >= 2
/// (gonality at most 2g - 2).
pub fn j_cb_ge2(q: u64, g: u64) -> Result<BoundReport> {
    require_prime_power(q)?;
    if g < 2 {
        return Err(Error::GenusTooSmall(g));
    }
    let value =
        BigUint::from(75u32) * pow(g, 4) * char_bound(q, 2 * g - 2)?.int_value();
    Ok(BoundReport::new(
        "jcb-ge2",
        &[("q", q), ("g", g)],
        BoundValue::Int(value),
        "75*g^4 * max(q^(2g-2)*(q^(4g-4)-1), 60)",
    ))
}

/// |W(E_8)| = 2^14 * 3^5 * 5^2 * 7, built from the prime factorization.
pub fn weyl_e8_order() -> BigUint {
    BigUint::from(2u32).pow(14) * BigUint::from(3u32).pow(5) * BigUint::from(5u32).pow(2) * 7u32
}

/// J_dP: q^3(q^2-1)(q^3-1) for odd q; the max with |W(E_8)| for even q.
pub fn j_dp(q: u64) -> Result<BoundReport> {
    require_prime_power(q)?;
    let base = pow(q, 3) * (pow(q, 2) - 1u32) * (pow(q, 3) - 1u32);
    let (value, formula) = if q.is_multiple_of(2) {
        (
            base.max(weyl_e8_order()),
            "max(q^3*(q^2-1)*(q^3-1), |W(E8)|)",
        )
    } else {
        (base, "q^3*(q^2-1)*(q^3-1)")
    };
    Ok(BoundReport::new(
        "jdp",
        &[("q", q)],
        BoundValue::Int(value),
        formula,
    ))
}

/// max(J_CB^0, J_CB^1, J_CB^{>=2} over 2 <= g <= g_base, J_dP). The genus cap
/// is required for the third branch because it grows with g; without a cap
/// only the other three branches enter.
pub fn surface_jordan_bound(q: u64, g_base: Option<u64>) -> Result<BoundReport> {
    if let Some(g) = g_base {
        if g < 2 {
            return Err(Error::GenusTooSmall(g));
        }
    }
    let mut branches: Vec<(String, BigUint)> = vec![
        ("jcb0".to_string(), j_cb0(q)?.int_value().clone()),
        ("jcb1".to_string(), j_cb1(q)?.int_value().clone()),
    ];
    if let Some(g_base) = g_base {
        for g in 2..=g_base {
            branches.push((format!("jcb-ge2(g={g})"), j_cb_ge2(q, g)?.int_value().clone()));
        }
    }
    branches.push(("jdp".to_string(), j_dp(q)?.int_value().clone()));
    let (best_name, best) = branches
        .iter()
        .max_by(|a, b| a.1.cmp(&b.1))
        .expect("nonempty");
    let mut inputs = vec![("q", q)];
    if let Some(g) = g_base {
        inputs.push(("g_base", g));
    }
    let mut r = BoundReport::new(
        "surface",
        &inputs,
        BoundValue::Int(best.clone()),
        "max(JCB0, JCB1, JCB>=2, JdP)",
    );
    r.rounding = Some("floor(2*sqrt(q)) inside the JCB1 branch");
    r.notes.insert("branch", best_name.clone());
    Ok(r)
}

/// The exceptional curve data for characteristic p and level n:
/// genus p^n(p^n - 1)/2 and automorphism count p^{3n}(p^{3n}+1)(p^{2n}-1).
#[derive(Debug, Clone)]
pub struct StichtenothCurve {
    pub p: u64,
    pub n: u64,
    pub genus: BigUint,
    pub aut_order: BigUint,
    /// False when the genus falls below 2 and the curve leaves the bound's
    /// regime (the p = 2, n = 1 curve has genus 1).
    pub in_regime: bool,
}

pub fn stichtenoth_exceptional(p: u64, n: u64) -> Result<StichtenothCurve> {
    if !int::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n < 1 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let pn = pow(p, n);
    let genus = &pn * (&pn - 1u32) / 2u32;
    let p3n = pow(p, 3 * n);
    let aut_order = &p3n * (&p3n + 1u32) * (pow(p, 2 * n) - 1u32);
    let in_regime = genus >= BigUint::from(2u32);
    Ok(StichtenothCurve {
        p,
        n,
        genus,
        aut_order,
        in_regime,
    })
}

/// f(x) = 16 (x+1)^2 (x^2 - x + 1) / (x (x-1)^3), the exceptional-curve
/// automorphism count divided by genus^4 as a function of x = p^n.
pub fn f_ratio(x: &BigRational) -> Result<BigRational> {
    if x.is_zero() || x.is_one() {
        return Err(Error::PoleAt(x.to_string()));
    }
    let one = BigRational::one();
    let sixteen = BigRational::from(BigInt::from(16));
    let xp1 = x + &one;
    let xm1 = x - &one;
    let num = sixteen * (&xp1 * &xp1) * (x * x - x + &one);
    let den = x * (&xm1 * &xm1 * &xm1);
    Ok(num / den)
}

/// The unsimplified form x^3 (x^3 + 1)(x^2 - 1) / (x(x-1)/2)^4; agrees with
/// [`f_ratio`] everywhere both are defined.
pub fn f_ratio_unsimplified(x: &BigRational) -> Result<BigRational> {
    if x.is_zero() || x.is_one() {
        return Err(Error::PoleAt(x.to_string()));
    }
    let one = BigRational::one();
    let x2 = x * x;
    let x3 = &x2 * x;
    let num = &x3 * (&x3 + &one) * (&x2 - &one);
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let base = half * x * (x - &one);
    let den = &base * &base * &base * &base;
    Ok(num / den)
}

/// Automorphism bounds for a genus-g curve in positive characteristic:
/// 75 g^4 always, 16 g^4 off the exceptional family.
#[derive(Debug, Clone)]
pub struct CurveAutBound {
    pub g: u64,
    pub strict_75: BigUint,
    pub generic_16: BigUint,
}

pub fn curve_aut_bound(g: u64) -> Result<CurveAutBound> {
    if g < 2 {
        return Err(Error::GenusTooSmall(g));
    }
    let g4 = pow(g, 4);
    Ok(CurveAutBound {
        g,
        strict_75: BigUint::from(75u32) * &g4,
        generic_16: BigUint::from(16u32) * g4,
    })
}

/// q^k - 1: every finite multiplicative order in a degree-k extension of a
/// purely transcendental extension of F_q divides this.
pub fn element_order_bound(q: u64, k: u64) -> Result<BigUint> {
    require_prime_power(q)?;
    if k < 1 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    Ok(pow(q, k) - 1u32)
}

/// Divisibility obstruction against PSL_2(F_{p^r}) embedding into the
/// automorphism group of a conic over a degree-k extension: the witness
/// element order w = (p^r + 1)/2 (odd p) or 2^r + 1 (p = 2) must divide
/// q^{2k} - 1, and for r > k*l it never does.
#[derive(Debug, Clone)]
pub struct PslObstruction {
    pub p: u64,
    pub r: u64,
    pub q: u64,
    pub k: u64,
    pub witness_order: BigUint,
    pub order_bound: BigUint,
    pub excluded: bool,
    /// r > k*l, the regime where exclusion is guaranteed.
    pub beyond_degree_window: bool,
}

pub fn psl_embedding_obstruction(p: u64, r: u64, q: u64, k: u64) -> Result<PslObstruction> {
    let (qp, l) = require_prime_power(q)?;
    if qp != p {
        return Err(Error::CharacteristicMismatch { p, q });
    }
    if r < 1 || k < 1 {
        return Err(Error::InvalidInput("r and k must be at least 1".into()));
    }
    let witness_order = if p == 2 {
        pow(2, r) + 1u32
    } else {
        (pow(p, r) + 1u32) / 2u32
    };
    let order_bound = pow(q, 2 * k) - 1u32;
    let excluded = !(&order_bound % &witness_order).is_zero();
    Ok(PslObstruction {
        p,
        r,
        q,
        k,
        witness_order,
        order_bound,
        excluded,
        beyond_degree_window: r > k * l as u64,
    })
}

/// |G| <= N * |GL_d(F_q)| for a p'-group of birational permutations of a
/// variety with N rational points and a d-dimensional tangent space at one.
pub fn bbir_bound(n_points: u64, d: u32, q: u64) -> Result<BigUint> {
    if n_points < 1 {
        return Err(Error::InvalidInput("N must be at least 1".into()));
    }
    Ok(crate::group::pgl::gl_order(d, q)? * n_points)
}

/// (J, e) = (C^C, 1): p-Jordan constants from a p'-boundedness constant C.
pub fn p_jordan_constants(c: u64) -> Result<(BigUint, u32)> {
    if c < 1 {
        return Err(Error::InvalidInput("C must be at least 1".into()));
    }
    Ok((BigUint::from(c).pow(c as u32), 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn char_bound_values() {
        assert_eq!(char_bound(2, 1).unwrap().int_value(), &big(60));
        assert_eq!(char_bound(3, 2).unwrap().int_value(), &big(720));
        // 4 * 15 = 60 ties the constant branch.
        assert_eq!(char_bound(4, 1).unwrap().int_value(), &big(60));
        assert!(char_bound(6, 1).is_err());
    }

    #[test]
    fn char_bound_monotone_and_at_least_60() {
        let mut prev = big(0);
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let v = char_bound(q, 1).unwrap().int_value().clone();
            assert!(v >= big(60));
            assert!(v >= prev);
            prev = v;
        }
        for k in 1..6 {
            let a = char_bound(3, k).unwrap().int_value().clone();
            let b = char_bound(3, k + 1).unwrap().int_value().clone();
            assert!(b >= a);
        }
    }

    #[test]
    fn conic_bundle_bound_values() {
        assert_eq!(conic_bundle_bound(2, 1, 1).unwrap().int_value(), &big(60));
        assert_eq!(conic_bundle_bound(2, 2, 6).unwrap().int_value(), &big(360));
        // Gonality-1 base with full PGL_2(F_5) recovers the genus-0 constant.
        let via_general = conic_bundle_bound(5, 1, 120).unwrap();
        assert_eq!(via_general.int_value(), &big(14400));
        assert_eq!(via_general.int_value(), j_cb0(5).unwrap().int_value());
    }

    #[test]
    fn gonality_bounds() {
        assert_eq!(gonality_bound(0), 1);
        assert_eq!(gonality_bound(1), 2);
        assert_eq!(gonality_bound(5), 8);
    }

    #[test]
    fn hasse_weil_intervals() {
        let g0 = hasse_weil_interval(7, 0).unwrap();
        assert_eq!((g0.lo.clone(), g0.hi.clone()), (big(8), big(8)));
        let e2 = hasse_weil_interval(2, 1).unwrap();
        assert_eq!((e2.lo.clone(), e2.hi.clone()), (big(1), big(5)));
        let e3 = hasse_weil_interval(3, 1).unwrap();
        assert_eq!((e3.lo.clone(), e3.hi.clone()), (big(1), big(7)));
        let e9 = hasse_weil_interval(9, 1).unwrap();
        assert_eq!((e9.lo.clone(), e9.hi.clone()), (big(4), big(16)));
        // Large genus over a small field clamps at zero.
        let clamped = hasse_weil_interval(2, 3).unwrap();
        assert!(clamped.clamped_at_zero);
        assert_eq!(clamped.lo, big(0));
    }

    #[test]
    fn genus1_bounds() {
        assert_eq!(genus1_aut_bound(4).unwrap().int_value(), &big(216));
        assert_eq!(genus1_aut_bound(9).unwrap().int_value(), &big(384));
        // Non-square q: floor(2*sqrt(2)) = 2 gives 24 * 5 = 120.
        assert_eq!(genus1_aut_bound(2).unwrap().int_value(), &big(120));
    }

    #[test]
    fn conic_bundle_constants() {
        assert_eq!(j_cb0(2).unwrap().int_value(), &big(360));
        assert_eq!(j_cb1(4).unwrap().int_value(), &big(881_280));
        assert_eq!(j_cb_ge2(2, 2).unwrap().int_value(), &big(72_000));
        assert!(j_cb_ge2(2, 1).is_err());
    }

    #[test]
    fn weyl_order_from_factorization() {
        assert_eq!(weyl_e8_order(), big(696_729_600));
    }

    #[test]
    fn del_pezzo_constant() {
        assert_eq!(j_dp(3).unwrap().int_value(), &big(5616));
        assert_eq!(j_dp(2).unwrap().int_value(), &big(696_729_600));
        assert_eq!(j_dp(5).unwrap().int_value(), &big(372_000));
    }

    #[test]
    fn surface_bound_takes_the_best_branch() {
        let r = surface_jordan_bound(2, None).unwrap();
        assert_eq!(r.int_value(), &big(696_729_600));
        assert_eq!(r.notes["branch"], "jdp");
        // Monotone in the genus cap: a larger cap can only grow the max.
        let a = surface_jordan_bound(3, Some(2)).unwrap().int_value().clone();
        let b = surface_jordan_bound(3, Some(3)).unwrap().int_value().clone();
        assert!(b >= a);
    }

    #[test]
    fn stichtenoth_values() {
        let c31 = stichtenoth_exceptional(3, 1).unwrap();
        assert_eq!((c31.genus.clone(), c31.aut_order.clone()), (big(3), big(6048)));
        assert!(c31.in_regime);
        let c21 = stichtenoth_exceptional(2, 1).unwrap();
        assert_eq!(c21.genus, big(1));
        assert!(!c21.in_regime);
        let c22 = stichtenoth_exceptional(2, 2).unwrap();
        assert_eq!((c22.genus.clone(), c22.aut_order.clone()), (big(6), big(62_400)));
    }

    #[test]
    fn f_ratio_values_and_identity() {
        assert_eq!(f_ratio(&rat(3, 1)).unwrap(), rat(224, 3));
        assert_eq!(f_ratio(&rat(2, 1)).unwrap(), rat(216, 1));
        assert_eq!(f_ratio(&rat(4, 1)).unwrap(), rat(1300, 27));
        for x in [rat(2, 1), rat(5, 2), rat(3, 1), rat(4, 1), rat(5, 1), rat(10, 1), rat(100, 1)] {
            assert_eq!(
                f_ratio(&x).unwrap(),
                f_ratio_unsimplified(&x).unwrap(),
                "the two displayed forms agree at {x}"
            );
        }
        assert!(matches!(f_ratio(&rat(1, 1)), Err(Error::PoleAt(_))));
        assert!(matches!(f_ratio(&rat(0, 1)), Err(Error::PoleAt(_))));
    }

    #[test]
    fn f_ratio_decreases_and_stays_above_16_on_samples() {
        let samples = [rat(2, 1), rat(5, 2), rat(3, 1), rat(4, 1), rat(5, 1), rat(10, 1), rat(100, 1)];
        let sixteen = rat(16, 1);
        let values: Vec<BigRational> = samples.iter().map(|x| f_ratio(x).unwrap()).collect();
        for w in values.windows(2) {
            assert!(w[0] > w[1], "sampled monotone decrease");
        }
        for v in &values {
            assert!(*v > sixteen);
        }
    }

    #[test]
    fn exceptional_ratio_matches_f_exactly() {
        for (p, n) in [(3u64, 1u64), (2, 2), (5, 1), (2, 3), (7, 1)] {
            let c = stichtenoth_exceptional(p, n).unwrap();
            if !c.in_regime {
                continue;
            }
            let x = BigRational::from(BigInt::from(pow(p, n)));
            let lhs = BigRational::new(
                BigInt::from(c.aut_order.clone()),
                BigInt::from(c.genus.pow(4)),
            );
            assert_eq!(lhs, f_ratio(&x).unwrap(), "p = {p}, n = {n}");
            // And the 75 g^4 bound is strict.
            let bound = curve_aut_bound(c.genus.to_u64().unwrap()).unwrap();
            assert!(c.aut_order < bound.strict_75);
        }
    }

    #[test]
    fn curve_aut_bound_values() {
        let b2 = curve_aut_bound(2).unwrap();
        assert_eq!(b2.strict_75, big(1200));
        let b3 = curve_aut_bound(3).unwrap();
        assert_eq!(b3.strict_75, big(6075));
        assert!(b3.strict_75 > stichtenoth_exceptional(3, 1).unwrap().aut_order);
        let b6 = curve_aut_bound(6).unwrap();
        assert_eq!(b6.strict_75, big(97_200));
        assert!(b6.strict_75 > stichtenoth_exceptional(2, 2).unwrap().aut_order);
        assert!(curve_aut_bound(1).is_err());
    }

    #[test]
    fn element_order_bound_values() {
        assert_eq!(element_order_bound(2, 1).unwrap(), big(1));
        assert_eq!(element_order_bound(2, 2).unwrap(), big(3));
        assert_eq!(element_order_bound(3, 2).unwrap(), big(8));
        // Cross-check at k = 1: all orders in F_9* divide 8.
        let f9 = crate::algebra::field::FieldSpec::new(3, 2).unwrap();
        for x in f9.elements().filter(|x| !x.is_zero()) {
            assert_eq!(8 % x.multiplicative_order().unwrap(), 0);
        }
    }

    #[test]
    fn psl_obstruction_cases() {
        let d = psl_embedding_obstruction(2, 2, 2, 1).unwrap();
        assert_eq!(d.witness_order, big(5));
        assert_eq!(d.order_bound, big(3));
        assert!(d.excluded);
        assert!(d.beyond_degree_window);

        let d = psl_embedding_obstruction(3, 2, 3, 1).unwrap();
        assert_eq!((d.witness_order.clone(), d.order_bound.clone()), (big(5), big(8)));
        assert!(d.excluded);

        // PSL_2(F_2) does embed into PGL_2(F_4): 3 divides 15.
        let d = psl_embedding_obstruction(2, 1, 4, 1).unwrap();
        assert_eq!((d.witness_order.clone(), d.order_bound.clone()), (big(3), big(15)));
        assert!(!d.excluded);
        assert!(!d.beyond_degree_window);

        assert!(matches!(
            psl_embedding_obstruction(3, 1, 4, 1),
            Err(Error::CharacteristicMismatch { .. })
        ));
    }

    #[test]
    fn bbir_bound_values() {
        assert_eq!(bbir_bound(1, 1, 7).unwrap(), big(6));
        assert_eq!(bbir_bound(3, 2, 2).unwrap(), big(18));
        assert_eq!(bbir_bound(5, 3, 2).unwrap(), big(840));
    }

    #[test]
    fn p_jordan_constant_values() {
        assert_eq!(p_jordan_constants(1).unwrap(), (big(1), 1));
        assert_eq!(p_jordan_constants(2).unwrap(), (big(4), 1));
        assert_eq!(p_jordan_constants(3).unwrap(), (big(27), 1));
        assert!(p_jordan_constants(0).is_err());
        // J >= C always.
        for c in 1..10u64 {
            assert!(p_jordan_constants(c).unwrap().0 >= big(c));
        }
    }
}
