//! Dense polynomials over F_q: the ring F_q\[t\] and its degree-truncated
//! slices F_q\[t\]_{<=n}.
//!
//! The zero polynomial has no stored degree at all — `degree()` returns
//! `None` — so degree arithmetic never sees a sentinel value.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::algebra::field::{FieldElement, FieldSpec};
use crate::error::{Error, Result};
use crate::guard::Guard;

/// Element of F_q\[t\]. Coefficients are constant-first with no trailing zeros.
#[derive(Clone)]
pub struct Poly {
    spec: FieldSpec,
    coeffs: Vec<FieldElement>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.coeffs == other.coeffs
    }
}
impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.spec.hash(state);
        for c in &self.coeffs {
            c.hash(state);
        }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let t = match (i, c.is_one()) {
                (0, _) => format!("{c}"),
                (1, true) => "t".to_string(),
                (1, false) => format!("{c}t"),
                (i, true) => format!("t^{i}"),
                (i, false) => format!("{c}t^{i}"),
            };
            terms.push(t);
        }
        write!(f, "{}", terms.join("+"))
    }
}

impl Poly {
    pub fn zero(spec: &FieldSpec) -> Poly {
        Poly {
            spec: spec.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(spec: &FieldSpec) -> Poly {
        Poly::constant(spec.one())
    }

    /// The variable t.
    pub fn var(spec: &FieldSpec) -> Poly {
        Poly {
            spec: spec.clone(),
            coeffs: vec![spec.zero(), spec.one()],
        }
    }

    pub fn constant(c: FieldElement) -> Poly {
        let spec = c.spec().clone();
        let coeffs = if c.is_zero() { Vec::new() } else { vec![c] };
        Poly { spec, coeffs }
    }

    pub fn from_elements(spec: &FieldSpec, mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Poly {
            spec: spec.clone(),
            coeffs,
        }
    }

    /// Builds a polynomial from prime-subfield residues, constant first.
    pub fn from_residues(spec: &FieldSpec, residues: &[u64]) -> Poly {
        let coeffs = residues.iter().map(|&r| spec.from_u64(r)).collect();
        Poly::from_elements(spec, coeffs)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.spec.zero())
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = self.spec.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn scale(&self, c: &FieldElement) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.spec);
        }
        let coeffs = self.coeffs.iter().map(|a| a * c).collect();
        Poly::from_elements(&self.spec, coeffs)
    }

    /// Scales by the inverse of the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("leading coefficient nonzero")),
        }
    }

    /// Quotient and remainder; errors on a zero divisor.
    pub fn divmod(&self, den: &Poly) -> Result<(Poly, Poly)> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        assert_eq!(self.spec, den.spec, "field mismatch");
        let dd = den.degree().unwrap();
        let lead_inv = den.leading_coeff().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let trim = |v: &mut Vec<FieldElement>| {
            while v.last().is_some_and(FieldElement::is_zero) {
                v.pop();
            }
        };
        trim(&mut rem);
        if rem.len() < dd + 1 {
            return Ok((Poly::zero(&self.spec), Poly::from_elements(&self.spec, rem)));
        }
        let mut quo = vec![self.spec.zero(); rem.len() - dd];
        while rem.len() > dd {
            let scale = &(rem.last().unwrap().clone()) * &lead_inv;
            let shift = rem.len() - dd - 1;
            quo[shift] = scale.clone();
            for (i, dc) in den.coeffs.iter().enumerate() {
                let sub = &scale * dc;
                rem[shift + i] = &rem[shift + i] - &sub;
            }
            trim(&mut rem);
            if rem.is_empty() {
                break;
            }
        }
        Ok((
            Poly::from_elements(&self.spec, quo),
            Poly::from_elements(&self.spec, rem),
        ))
    }

    /// Exact quotient, or None when the division leaves a remainder.
    pub fn exact_div(&self, den: &Poly) -> Option<Poly> {
        let (q, r) = self.divmod(den).ok()?;
        r.is_zero().then_some(q)
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.spec, rhs.spec, "field mismatch");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        Poly::from_elements(&self.spec, coeffs)
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.spec, rhs.spec, "field mismatch");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        Poly::from_elements(&self.spec, coeffs)
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let coeffs = self.coeffs.iter().map(|c| -c).collect();
        Poly::from_elements(&self.spec, coeffs)
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.spec, rhs.spec, "field mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.spec);
        }
        let mut coeffs = vec![self.spec.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Poly::from_elements(&self.spec, coeffs)
    }
}

/// Monic greatest common divisor. Errors when both inputs are zero.
pub fn poly_gcd(f: &Poly, g: &Poly) -> Result<Poly> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    assert_eq!(f.spec(), g.spec(), "field mismatch");
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let (_, r) = a.divmod(&b)?;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// The polynomial in F_q\[t\]_{<=max_deg} whose base-q digit string is `index`;
/// digit i (in the canonical element order of F_q) is the coefficient of t^i.
pub fn poly_from_index(spec: &FieldSpec, max_deg: u64, mut index: u64) -> Poly {
    let q = spec.q();
    let mut coeffs = Vec::with_capacity(max_deg as usize + 1);
    for _ in 0..=max_deg {
        coeffs.push(spec.element_from_index(index % q));
        index /= q;
    }
    Poly::from_elements(spec, coeffs)
}

/// Inverse of [`poly_from_index`]; requires deg <= max_deg.
pub fn poly_to_index(p: &Poly, max_deg: u64) -> u64 {
    let spec = p.spec();
    let q = spec.q();
    debug_assert!(p.degree().is_none_or(|d| d as u64 <= max_deg));
    let mut idx = 0u64;
    for i in (0..=max_deg).rev() {
        idx = idx * q + spec.index_of(&p.coeff(i as usize));
    }
    idx
}

/// All q^(n+1) polynomials of degree <= n in coefficient-lexicographic order.
pub fn enumerate_polys(spec: &FieldSpec, n: u64, guard: &Guard) -> Result<Vec<Poly>> {
    let count = crate::algebra::int::checked_pow_u128(spec.q(), n as u32 + 1)
        .ok_or(Error::GuardExceeded {
            what: "truncated polynomials",
            need: u128::MAX,
            limit: guard.max_enumerated,
        })?;
    guard.check_enumeration("truncated polynomials", count)?;
    Ok((0..count as u64)
        .map(|i| poly_from_index(spec, n, i))
        .collect())
}
