//! PGL_2 and PSL_2 over F_q as explicit groups of scalar-normalized 2x2
//! matrices, plus the standard order formulas for GL_d.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;

use crate::algebra::field::{FieldElement, FieldSpec};
use crate::algebra::int;
use crate::error::{Error, Result};
use crate::group::finite::FiniteGroup;
use crate::guard::Guard;

/// Element of PGL_2(F_q): an invertible 2x2 matrix scaled so that its first
/// nonzero entry in row-major order is 1. Two matrices are equal in PGL_2
/// exactly when their normalized forms coincide, so equality and hashing on
/// the normalized entries are canonical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjectiveMatrix {
    entries: [FieldElement; 4],
}

impl fmt::Debug for ProjectiveMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ProjectiveMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.entries;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

impl ProjectiveMatrix {
    /// Normalizes and validates invertibility.
    pub fn new(entries: [FieldElement; 4]) -> Result<Self> {
        let det = Self::det_of(&entries);
        if det.is_zero() {
            return Err(Error::InvalidInput(
                "matrix is singular over F_q".to_string(),
            ));
        }
        Ok(Self::normalize(entries))
    }

    fn normalize(entries: [FieldElement; 4]) -> Self {
        let lead = entries
            .iter()
            .find(|e| !e.is_zero())
            .expect("nonzero matrix")
            .clone();
        let inv = lead.inv().expect("nonzero entry");
        let entries = [
            &entries[0] * &inv,
            &entries[1] * &inv,
            &entries[2] * &inv,
            &entries[3] * &inv,
        ];
        ProjectiveMatrix { entries }
    }

    fn det_of(e: &[FieldElement; 4]) -> FieldElement {
        &(&e[0] * &e[3]) - &(&e[1] * &e[2])
    }

    pub fn identity(spec: &FieldSpec) -> Self {
        ProjectiveMatrix {
            entries: [spec.one(), spec.zero(), spec.zero(), spec.one()],
        }
    }

    pub fn entries(&self) -> &[FieldElement; 4] {
        &self.entries
    }

    /// Determinant of the normalized representative. Well-defined in
    /// F_q*/(F_q*)^2, which is all PSL_2 membership needs.
    pub fn det(&self) -> FieldElement {
        Self::det_of(&self.entries)
    }

    pub fn mul(&self, rhs: &ProjectiveMatrix) -> ProjectiveMatrix {
        let [a, b, c, d] = &self.entries;
        let [e, f, g, h] = &rhs.entries;
        ProjectiveMatrix::normalize([
            &(a * e) + &(b * g),
            &(a * f) + &(b * h),
            &(c * e) + &(d * g),
            &(c * f) + &(d * h),
        ])
    }

    pub fn inverse(&self) -> ProjectiveMatrix {
        // Adjugate; the determinant scalar is absorbed by normalization.
        let [a, b, c, d] = &self.entries;
        ProjectiveMatrix::normalize([d.clone(), -b, -c, a.clone()])
    }

    fn key(&self, spec: &FieldSpec) -> [u64; 4] {
        [
            spec.index_of(&self.entries[0]),
            spec.index_of(&self.entries[1]),
            spec.index_of(&self.entries[2]),
            spec.index_of(&self.entries[3]),
        ]
    }
}

/// A materialized matrix group: the abstract group plus the matrix behind
/// each element handle.
pub struct MatGroup {
    pub group: FiniteGroup,
    pub mats: Vec<ProjectiveMatrix>,
    pub spec: FieldSpec,
}

/// |GL_d(F_q)| = prod_{i=0..d-1} (q^d - q^i).
pub fn gl_order(d: u32, q: u64) -> Result<BigUint> {
    if d < 1 {
        return Err(Error::InvalidInput("d must be at least 1".into()));
    }
    int::prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let qd = BigUint::from(q).pow(d);
    let mut acc = BigUint::from(1u32);
    let mut qi = BigUint::from(1u32);
    for _ in 0..d {
        acc *= &qd - &qi;
        qi *= q;
    }
    Ok(acc)
}

/// |PGL_2(F_q)| = q(q^2 - 1).
pub fn pgl2_order(q: u64) -> Result<BigUint> {
    int::prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let q = BigUint::from(q);
    Ok(&q * (&q * &q - 1u32))
}

/// |PSL_2(F_q)| = q(q^2 - 1) / gcd(2, q - 1).
pub fn psl2_order(q: u64) -> Result<BigUint> {
    let full = pgl2_order(q)?;
    Ok(if q.is_multiple_of(2) { full } else { full / 2u32 })
}

/// Materializes PGL_2(F_q). Elements are enumerated directly in normalized
/// form, ordered by which entry carries the leading 1 and then by entry
/// indices, so the element order is canonical and reproducible.
pub fn pgl2(spec: &FieldSpec, guard: &Guard) -> Result<MatGroup> {
    let q = spec.q();
    let order = q * (q * q - 1);
    guard.check_enumeration("PGL_2 elements", order as u128)?;
    guard.check_table("PGL_2 composition table", order as u128)?;

    let mut mats: Vec<ProjectiveMatrix> = Vec::with_capacity(order as usize);
    let one = spec.one();
    let zero = spec.zero();
    let push_if_invertible = |e: [FieldElement; 4], mats: &mut Vec<ProjectiveMatrix>| {
        if !ProjectiveMatrix::det_of(&e).is_zero() {
            mats.push(ProjectiveMatrix { entries: e });
        }
    };
    // Leading 1 at position a.
    for b in 0..q {
        for c in 0..q {
            for d in 0..q {
                push_if_invertible(
                    [
                        one.clone(),
                        spec.element_from_index(b),
                        spec.element_from_index(c),
                        spec.element_from_index(d),
                    ],
                    &mut mats,
                );
            }
        }
    }
    // a = 0, leading 1 at b: determinant is -bc, so c must be nonzero.
    for c in 1..q {
        for d in 0..q {
            push_if_invertible(
                [
                    zero.clone(),
                    one.clone(),
                    spec.element_from_index(c),
                    spec.element_from_index(d),
                ],
                &mut mats,
            );
        }
    }
    // a = b = 0 gives a zero determinant; no further patterns contribute.
    if mats.len() as u64 != order {
        return Err(Error::NotAGroup(format!(
            "PGL_2(F_{q}) enumeration produced {} elements, expected {order}",
            mats.len()
        )));
    }

    let index: HashMap<[u64; 4], u32> = mats
        .iter()
        .enumerate()
        .map(|(i, m)| (m.key(spec), i as u32))
        .collect();
    let labels = mats.iter().map(|m| m.to_string()).collect();
    let law = |a: u32, b: u32| -> u32 {
        let prod = mats[a as usize].mul(&mats[b as usize]);
        index[&prod.key(spec)]
    };
    let group = FiniteGroup::from_law(order as usize, law, Some(labels), guard)?;
    Ok(MatGroup {
        group,
        mats,
        spec: spec.clone(),
    })
}

/// Materializes PSL_2(F_q) as the subgroup of PGL_2(F_q) whose normalized
/// representatives have square determinant. For even q this is all of PGL_2.
pub fn psl2(spec: &FieldSpec, guard: &Guard) -> Result<MatGroup> {
    let full = pgl2(spec, guard)?;
    let squares = spec.nonzero_square_indices();
    let members: Vec<u32> = full
        .group
        .elements()
        .filter(|&i| {
            let det = full.mats[i as usize].det();
            squares[spec.index_of(&det) as usize]
        })
        .collect();
    let expected = psl2_order(spec.q())?;
    if BigUint::from(members.len()) != expected {
        return Err(Error::NotAGroup(format!(
            "PSL_2(F_{}) filter produced {} elements, expected {expected}",
            spec.q(),
            members.len()
        )));
    }
    let group = full.group.subgroup(&members);
    let mats = members
        .iter()
        .map(|&i| full.mats[i as usize].clone())
        .collect();
    Ok(MatGroup {
        group,
        mats,
        spec: spec.clone(),
    })
}
