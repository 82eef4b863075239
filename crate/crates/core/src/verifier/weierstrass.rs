//! Exhaustive Weierstrass cubics over small F_q: discriminants in every
//! characteristic and exact projective point counts.

use std::fmt;

use crate::algebra::field::{FieldElement, FieldSpec};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 in general form; the general
/// form keeps the discriminant valid in characteristics 2 and 3.
#[derive(Debug, Clone)]
pub struct WeierstrassCurve {
    pub a1: FieldElement,
    pub a2: FieldElement,
    pub a3: FieldElement,
    pub a4: FieldElement,
    pub a6: FieldElement,
}

impl fmt::Display for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "y^2 + {}xy + {}y = x^3 + {}x^2 + {}x + {}",
            self.a1, self.a3, self.a2, self.a4, self.a6
        )
    }
}

impl WeierstrassCurve {
    /// The curve whose coefficient tuple (a1, a2, a3, a4, a6) has base-q
    /// digit string `idx`; indices run over 0..q^5.
    pub fn from_index(spec: &FieldSpec, idx: u64) -> Self {
        let q = spec.q();
        let digit = |i: u32| spec.element_from_index(idx / q.pow(i) % q);
        WeierstrassCurve {
            a1: digit(0),
            a2: digit(1),
            a3: digit(2),
            a4: digit(3),
            a6: digit(4),
        }
    }

    pub fn coefficient_index(&self, spec: &FieldSpec) -> u64 {
        let q = spec.q();
        let parts = [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6];
        parts
            .iter()
            .enumerate()
            .map(|(i, e)| spec.index_of(e) * q.pow(i as u32))
            .sum()
    }

    /// The standard b-invariant discriminant, valid in all characteristics:
    /// delta = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6.
    pub fn discriminant(&self) -> FieldElement {
        let spec = self.a1.spec().clone();
        let c = |v: u64| spec.from_u64(v);
        let b2 = &(&self.a1 * &self.a1) + &(&c(4) * &self.a2);
        let b4 = &(&c(2) * &self.a4) + &(&self.a1 * &self.a3);
        let b6 = &(&self.a3 * &self.a3) + &(&c(4) * &self.a6);
        let b8 = &(&(&(&(&(&self.a1 * &self.a1) * &self.a6) + &(&(&c(4) * &self.a2) * &self.a6))
            - &(&(&self.a1 * &self.a3) * &self.a4))
            + &(&(&self.a2 * &self.a3) * &self.a3))
            - &(&self.a4 * &self.a4);
        let t1 = &(&(&b2 * &b2) * &b8);
        let t2 = &(&c(8) * &(&(&b4 * &b4) * &b4));
        let t3 = &(&c(27) * &(&b6 * &b6));
        let t4 = &(&c(9) * &(&(&b2 * &b4) * &b6));
        &(&(&(-t1) - t2) - t3) + t4
    }

    pub fn is_smooth(&self) -> bool {
        !self.discriminant().is_zero()
    }

    /// Projective point count: affine solutions plus the point at infinity.
    pub fn projective_point_count(&self, spec: &FieldSpec) -> u64 {
        let mut count = 1u64;
        for x in spec.elements() {
            let x2 = &x * &x;
            let rhs = &(&(&(&x2 * &x) + &(&self.a2 * &x2)) + &(&self.a4 * &x)) + &self.a6;
            for y in spec.elements() {
                let lhs = &(&(&y * &y) + &(&(&self.a1 * &x) * &y)) + &(&self.a3 * &y);
                if lhs == rhs {
                    count += 1;
                }
            }
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn count_of_y2_plus_y_eq_x3_over_f2() {
        // x = 0 gives y in {0, 1}; x = 1 gives none; plus infinity: N = 3.
        let spec = FieldSpec::new(2, 1).unwrap();
        let curve = WeierstrassCurve {
            a1: spec.zero(),
            a2: spec.zero(),
            a3: spec.one(),
            a4: spec.zero(),
            a6: spec.zero(),
        };
        assert!(curve.is_smooth());
        assert_eq!(curve.projective_point_count(&spec), 3);
    }

    #[test]
    fn index_round_trip() {
        let spec = FieldSpec::new(3, 1).unwrap();
        for idx in 0..3u64.pow(5) {
            let c = WeierstrassCurve::from_index(&spec, idx);
            assert_eq!(c.coefficient_index(&spec), idx);
        }
    }

    #[test]
    fn discriminant_in_odd_characteristic_matches_classic_formula() {
        // For y^2 = x^3 + a4 x + a6 over odd characteristic the discriminant
        // is -16 (4 a4^3 + 27 a6^2).
        let spec = FieldSpec::new(7, 1).unwrap();
        for a4i in 0..7u64 {
            for a6i in 0..7u64 {
                let a4 = spec.element_from_index(a4i);
                let a6 = spec.element_from_index(a6i);
                let curve = WeierstrassCurve {
                    a1: spec.zero(),
                    a2: spec.zero(),
                    a3: spec.zero(),
                    a4: a4.clone(),
                    a6: a6.clone(),
                };
                let classic = -&(&spec.from_u64(16)
                    * &(&(&spec.from_u64(4) * &(&(&a4 * &a4) * &a4))
                        + &(&spec.from_u64(27) * &(&a6 * &a6))));
                assert_eq!(curve.discriminant(), classic);
            }
        }
    }
}
