//! Prime-power finite fields F_q = F_{p^l} with exact arithmetic.
//!
//! A [`FieldSpec`] fixes the prime p, the exponent l, and a canonical
//! irreducible modulus of degree l over F_p. Elements are coefficient vectors
//! in the power basis of that modulus. The modulus is the lexicographically
//! least monic irreducible choice (smallest base-p digit string), so every
//! field has exactly one model and every element one representation.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::algebra::int;
use crate::error::{Error, Result};
use crate::guard::Guard;

#[derive(Debug)]
struct FieldSpecInner {
    p: u64,
    l: u32,
    q: u64,
    /// Monic irreducible modulus over F_p, constant coefficient first,
    /// length l + 1, leading coefficient 1.
    modulus: Vec<u64>,
}

/// The field F_q = F_{p^l} together with its canonical modulus.
#[derive(Clone)]
pub struct FieldSpec(Arc<FieldSpecInner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        // The modulus is a function of (p, l), so (p, l) determines the field.
        self.0.p == other.0.p && self.0.l == other.0.l
    }
}
impl Eq for FieldSpec {}

impl Hash for FieldSpec {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.l.hash(state);
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

impl FieldSpec {
    /// Builds F_{p^l} with the default guard.
    pub fn new(p: u64, l: u32) -> Result<Self> {
        Self::with_guard(p, l, &Guard::default())
    }

    pub fn with_guard(p: u64, l: u32, guard: &Guard) -> Result<Self> {
        if l < 1 {
            return Err(Error::ExponentTooSmall);
        }
        if !int::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let q_big = BigUint::from(p).pow(l);
        if q_big > BigUint::from(guard.max_enumerated) {
            return Err(Error::GuardExceeded {
                what: "field elements",
                need: q_big.to_u128().unwrap_or(u128::MAX),
                limit: guard.max_enumerated,
            });
        }
        let q = q_big.to_u64().expect("guarded above");
        let modulus = least_irreducible(p, l);
        Ok(FieldSpec(Arc::new(FieldSpecInner { p, l, q, modulus })))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn l(&self) -> u32 {
        self.0.l
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    /// Modulus coefficients over F_p, constant first, leading 1.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    /// Renders the modulus as a polynomial in x over F_p.
    pub fn modulus_string(&self) -> String {
        let mut terms = Vec::new();
        for (i, &c) in self.0.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let t = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            spec: self.clone(),
            coeffs: vec![0; self.0.l as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_u64(1)
    }

    /// Embeds the residue v mod p as a constant.
    pub fn from_u64(&self, v: u64) -> FieldElement {
        let mut coeffs = vec![0; self.0.l as usize];
        coeffs[0] = v % self.0.p;
        FieldElement {
            spec: self.clone(),
            coeffs,
        }
    }

    /// The element whose base-p digit string is `idx`; indices run over 0..q
    /// and give the canonical enumeration order of the field.
    pub fn element_from_index(&self, idx: u64) -> FieldElement {
        assert!(idx < self.0.q, "element index {idx} out of range");
        let mut coeffs = vec![0; self.0.l as usize];
        let mut rest = idx;
        for c in coeffs.iter_mut() {
            *c = rest % self.0.p;
            rest /= self.0.p;
        }
        FieldElement {
            spec: self.clone(),
            coeffs,
        }
    }

    pub fn index_of(&self, x: &FieldElement) -> u64 {
        debug_assert_eq!(self, &x.spec);
        let mut idx = 0u64;
        for &c in x.coeffs.iter().rev() {
            idx = idx * self.0.p + c;
        }
        idx
    }

    /// All q elements in canonical index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q).map(move |i| self.element_from_index(i))
    }

    /// Indices of the nonzero squares {x^2 : x in F_q*}.
    pub fn nonzero_square_indices(&self) -> Vec<bool> {
        let mut sq = vec![false; self.0.q as usize];
        for i in 1..self.0.q {
            let x = self.element_from_index(i);
            let y = &x * &x;
            sq[self.index_of(&y) as usize] = true;
        }
        sq
    }
}

/// An element of F_q: l residues mod p in the power basis of the modulus.
#[derive(Clone)]
pub struct FieldElement {
    spec: FieldSpec,
    coeffs: Vec<u64>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.coeffs == other.coeffs
    }
}
impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.spec.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec.index_of(self))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Canonical index; for prime fields this is the residue itself.
        write!(f, "{}", self.spec.index_of(self))
    }
}

impl FieldElement {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.spec.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; None for zero.
    pub fn inv(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return None;
        }
        let p = self.spec.p();
        let inv = pf_inv_mod(&self.coeffs, self.spec.modulus(), p);
        let mut coeffs = inv;
        coeffs.resize(self.spec.l() as usize, 0);
        Some(FieldElement {
            spec: self.spec.clone(),
            coeffs,
        })
    }

    /// Least m >= 1 with x^m = 1; divides q - 1.
    pub fn multiplicative_order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroHasNoOrder);
        }
        let mut m = self.spec.q() - 1;
        if m == 0 {
            unreachable!("q >= 2");
        }
        for (r, _) in int::factor(m) {
            while m.is_multiple_of(r) && self.pow(m / r).is_one() {
                m /= r;
            }
        }
        Ok(m)
    }
}

/// Least m >= 1 with x^m = 1 for nonzero x.
pub fn element_order(x: &FieldElement) -> Result<u64> {
    x.multiplicative_order()
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        assert_eq!(self.spec, rhs.spec, "field mismatch");
        let p = self.spec.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        FieldElement {
            spec: self.spec.clone(),
            coeffs,
        }
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        assert_eq!(self.spec, rhs.spec, "field mismatch");
        let p = self.spec.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        FieldElement {
            spec: self.spec.clone(),
            coeffs,
        }
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let p = self.spec.p();
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElement {
            spec: self.spec.clone(),
            coeffs,
        }
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        assert_eq!(self.spec, rhs.spec, "field mismatch");
        let p = self.spec.p();
        let l = self.spec.l() as usize;
        // Convolution into a width 2l-1 buffer, then reduction by the modulus.
        let mut buf = vec![0u128; 2 * l - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                buf[i + j] += a as u128 * b as u128;
            }
        }
        let modulus = self.spec.modulus();
        for i in (l..buf.len()).rev() {
            let c = buf[i] % p as u128;
            buf[i] = 0;
            if c == 0 {
                continue;
            }
            // x^i = x^(i-l) * x^l and x^l = -modulus[0..l].
            for j in 0..l {
                let sub = c * (modulus[j] as u128) % p as u128;
                buf[i - l + j] += p as u128 - sub;
            }
        }
        let coeffs = buf[..l].iter().map(|&c| (c % p as u128) as u64).collect();
        FieldElement {
            spec: self.spec.clone(),
            coeffs,
        }
    }
}

// ---------------------------------------------------------------------------
// Dense polynomial arithmetic over the prime field F_p, used to build the
// modulus and compute inverses. Coefficient vectors are constant-first with
// no trailing zeros.

fn pf_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pf_is_zero(v: &[u64]) -> bool {
    v.iter().all(|&c| c == 0)
}

fn mod_inv_u64(a: u64, p: u64) -> u64 {
    // Extended Euclid on integers; p prime, a != 0 mod p.
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let quo = r / new_r;
        (t, new_t) = (new_t, t - quo * new_t);
        (r, new_r) = (new_r, r - quo * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of non-unit");
    (((t % p as i128) + p as i128) % p as i128) as u64
}

/// Remainder of f modulo g over F_p; g need not be monic.
fn pf_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = f.to_vec();
    pf_trim(&mut r);
    let mut g = g.to_vec();
    pf_trim(&mut g);
    assert!(!g.is_empty(), "division by zero polynomial");
    let lead_inv = mod_inv_u64(*g.last().unwrap(), p);
    while r.len() >= g.len() {
        let lead = *r.last().unwrap();
        let scale = lead as u128 * lead_inv as u128 % p as u128;
        let shift = r.len() - g.len();
        for (i, &gc) in g.iter().enumerate() {
            let sub = scale * gc as u128 % p as u128;
            let cur = r[shift + i] as u128;
            r[shift + i] = ((cur + p as u128 - sub) % p as u128) as u64;
        }
        pf_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn pf_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if pf_is_zero(a) || pf_is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x as u128 * y as u128;
        }
    }
    let mut out: Vec<u64> = out.iter().map(|&c| (c % p as u128) as u64).collect();
    pf_trim(&mut out);
    out
}

fn pf_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    pf_trim(&mut out);
    out
}

fn pf_divmod(num: &[u64], den: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r = num.to_vec();
    pf_trim(&mut r);
    let mut d = den.to_vec();
    pf_trim(&mut d);
    assert!(!d.is_empty(), "division by zero polynomial");
    if r.len() < d.len() {
        return (Vec::new(), r);
    }
    let lead_inv = mod_inv_u64(*d.last().unwrap(), p);
    let mut quo = vec![0u64; r.len() - d.len() + 1];
    while r.len() >= d.len() && !r.is_empty() {
        let lead = *r.last().unwrap();
        let scale = (lead as u128 * lead_inv as u128 % p as u128) as u64;
        let shift = r.len() - d.len();
        quo[shift] = scale;
        for (i, &dc) in d.iter().enumerate() {
            let sub = scale as u128 * dc as u128 % p as u128;
            let cur = r[shift + i] as u128;
            r[shift + i] = ((cur + p as u128 - sub) % p as u128) as u64;
        }
        pf_trim(&mut r);
    }
    pf_trim(&mut quo);
    (quo, r)
}

/// Inverse of a modulo the irreducible `modulus` over F_p.
fn pf_inv_mod(a: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let mut r0: Vec<u64> = modulus.to_vec();
    let mut r1: Vec<u64> = a.to_vec();
    pf_trim(&mut r1);
    let mut s0: Vec<u64> = Vec::new();
    let mut s1: Vec<u64> = vec![1];
    while !pf_is_zero(&r1) {
        let (quo, rem) = pf_divmod(&r0, &r1, p);
        let s_next = pf_sub(&s0, &pf_mul(&quo, &s1, p), p);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s_next;
    }
    // r0 is a nonzero constant gcd since the modulus is irreducible.
    debug_assert_eq!(r0.len(), 1, "modulus not irreducible or a == 0");
    let c_inv = mod_inv_u64(r0[0], p);
    let mut out = pf_mul(&s0, &[c_inv], p);
    out = pf_rem(&out, modulus, p);
    out
}

/// The lexicographically least monic irreducible polynomial of degree l over
/// F_p: the candidate x^l + c is scanned in increasing base-p digit order of
/// c and tested by trial division against every lower-degree monic factor.
fn least_irreducible(p: u64, l: u32) -> Vec<u64> {
    if l == 1 {
        return vec![0, 1]; // x
    }
    let total = p.pow(l);
    for k in 0..total {
        let mut f = digits_base_p(k, p, l as usize);
        f.push(1);
        if pf_is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of each degree exists over F_p");
}

fn digits_base_p(mut k: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0u64; len];
    for d in out.iter_mut() {
        *d = k % p;
        k /= p;
    }
    out
}

fn pf_is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    // No factor of degree <= deg/2 means irreducible.
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for j in 0..count {
            let mut g = digits_base_p(j, p, d);
            g.push(1);
            if pf_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_construction() {
        let f2 = FieldSpec::new(2, 1).unwrap();
        assert_eq!(f2.q(), 2);
        assert_eq!(f2.modulus(), &[0, 1]);
    }

    #[test]
    fn non_prime_p_rejected() {
        assert_eq!(FieldSpec::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FieldSpec::new(1, 1).unwrap_err(), Error::NotPrime(1));
        assert_eq!(FieldSpec::new(2, 0).unwrap_err(), Error::ExponentTooSmall);
    }

    #[test]
    fn guard_rejects_huge_fields() {
        let g = Guard {
            max_enumerated: 100,
            ..Guard::default()
        };
        assert!(matches!(
            FieldSpec::with_guard(2, 20, &g),
            Err(Error::GuardExceeded { .. })
        ));
    }

    /// Oracle for the F_9 modulus: enumerate monic quadratics over F_3 in the
    /// canonical order and take the first with no root.
    #[test]
    fn f9_modulus_matches_root_scan_oracle() {
        let mut expected = None;
        'outer: for k in 0..9u64 {
            let c0 = k % 3;
            let c1 = k / 3;
            for x in 0..3u64 {
                if (x * x + c1 * x + c0) % 3 == 0 {
                    continue 'outer;
                }
            }
            expected = Some(vec![c0, c1, 1]);
            break;
        }
        let f9 = FieldSpec::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), expected.unwrap().as_slice());
        assert_eq!(f9.modulus(), &[1, 0, 1]); // x^2 + 1
    }

    #[test]
    fn f4_has_generator_of_order_three() {
        let f4 = FieldSpec::new(2, 2).unwrap();
        let mut orders = Vec::new();
        for x in f4.elements().filter(|x| !x.is_zero()) {
            orders.push(x.multiplicative_order().unwrap());
        }
        orders.sort();
        assert_eq!(orders, vec![1, 3, 3]);
    }

    #[test]
    fn identity_has_order_one_and_zero_errors() {
        let f5 = FieldSpec::new(5, 1).unwrap();
        assert_eq!(f5.one().multiplicative_order().unwrap(), 1);
        assert_eq!(
            f5.zero().multiplicative_order().unwrap_err(),
            Error::ZeroHasNoOrder
        );
    }

    #[test]
    fn orders_divide_q_minus_1_for_small_fields() {
        for (p, l) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4)] {
            let f = FieldSpec::new(p, l).unwrap();
            for x in f.elements().filter(|x| !x.is_zero()) {
                let m = x.multiplicative_order().unwrap();
                assert_eq!((f.q() - 1) % m, 0, "order {m} in F_{}", f.q());
                assert!(x.pow(f.q() - 1).is_one());
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_up_to_16() {
        for (p, l) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)] {
            let f = FieldSpec::new(p, l).unwrap();
            let elems: Vec<_> = f.elements().collect();
            for a in &elems {
                for b in &elems {
                    assert_eq!(&(a + b), &(b + a));
                    assert_eq!(&(a * b), &(b * a));
                    for c in &elems {
                        assert_eq!(&(&(a + b) + c), &(a + &(b + c)));
                        assert_eq!(&(&(a * b) * c), &(a * &(b * c)));
                        assert_eq!(&(a * &(b + c)), &(&(a * b) + &(a * c)));
                    }
                }
                if !a.is_zero() {
                    let inv = a.inv().unwrap();
                    assert!((a * &inv).is_one());
                }
                assert!((a - a).is_zero());
                assert_eq!(&(a + &-a), &f.zero());
            }
        }
    }

    #[test]
    fn element_index_round_trip() {
        let f8 = FieldSpec::new(2, 3).unwrap();
        for i in 0..8 {
            let x = f8.element_from_index(i);
            assert_eq!(f8.index_of(&x), i);
        }
    }
}
