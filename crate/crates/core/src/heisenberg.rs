//! The unitriangular witness family G_n inside PGL_3(F_q(t)).
//!
//! G_n consists of upper unitriangular 3x3 matrices
//!
//! ```text
//! [1 a b]
//! [0 1 c]       a, c in F_q[t]_{<= m},  b in F_q[t]_{<= n},  m = floor(n/2)
//! [0 0 1]
//! ```
//!
//! The law is (a1,b1,c1)(a2,b2,c2) = (a1+a2, b1+b2+a1*c2, c1+c2); the cross
//! term has degree at most 2m <= n, so the family is closed. Elements are
//! kept as triples — the degree-truncation invariants are primitive that way
//! — and a matrix rendering exists only for display. As n grows, the minimal
//! index of an abelian subgroup grows like q^(m+1), which is what makes the
//! family a non-Jordan witness.

use std::fmt;

use num_bigint::BigUint;

use crate::algebra::field::FieldSpec;
use crate::algebra::poly::{poly_from_index, poly_to_index, Poly};
use crate::error::{Error, Result};
use crate::group::finite::FiniteGroup;
use crate::group::subgroups;
use crate::guard::Guard;

/// Parameters of G_n: the field, the degree cap n on the corner entry, and
/// m = floor(n/2) for the off-diagonal entries.
#[derive(Clone, PartialEq, Eq)]
pub struct HeisenbergParams {
    spec: FieldSpec,
    n: u64,
    m: u64,
}

impl fmt::Debug for HeisenbergParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G_{}(F_{})", self.n, self.spec.q())
    }
}

impl HeisenbergParams {
    pub fn new(spec: FieldSpec, n: u64) -> Self {
        HeisenbergParams {
            spec,
            m: n / 2,
            n,
        }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// |G_n| = q^(n+1) * q^(2m+2).
    pub fn group_order(&self) -> BigUint {
        BigUint::from(self.spec.q()).pow((self.n + 2 * self.m + 3) as u32)
    }

    /// |Z(G_n)| = q^(n+1).
    pub fn center_order(&self) -> BigUint {
        BigUint::from(self.spec.q()).pow((self.n + 1) as u32)
    }

    /// Centralizer cap for non-central elements: q^(n+1) * q^(m+1).
    pub fn noncentral_centralizer_bound(&self) -> BigUint {
        BigUint::from(self.spec.q()).pow((self.n + self.m + 2) as u32)
    }

    /// Certified lower bound q^(m+1) on the index of any abelian subgroup.
    pub fn min_abelian_index_bound(&self) -> BigUint {
        BigUint::from(self.spec.q()).pow((self.m + 1) as u32)
    }

    pub fn identity(&self) -> HeisenbergElement {
        let z_m = Poly::zero(&self.spec);
        HeisenbergElement {
            params: self.clone(),
            a: z_m.clone(),
            b: z_m.clone(),
            c: z_m,
        }
    }
}

/// Element of G_n as the triple (a, b, c).
#[derive(Clone, PartialEq, Eq)]
pub struct HeisenbergElement {
    params: HeisenbergParams,
    a: Poly,
    b: Poly,
    c: Poly,
}

impl fmt::Debug for HeisenbergElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl fmt::Display for HeisenbergElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

fn check_degree(p: &Poly, bound: u64, component: char) -> Result<()> {
    match p.degree() {
        Some(d) if d as u64 > bound => Err(Error::DegreeBound {
            component,
            got: d,
            bound,
        }),
        _ => Ok(()),
    }
}

impl HeisenbergElement {
    pub fn new(params: &HeisenbergParams, a: Poly, b: Poly, c: Poly) -> Result<Self> {
        check_degree(&a, params.m, 'a')?;
        check_degree(&b, params.n, 'b')?;
        check_degree(&c, params.m, 'c')?;
        Ok(HeisenbergElement {
            params: params.clone(),
            a,
            b,
            c,
        })
    }

    pub fn params(&self) -> &HeisenbergParams {
        &self.params
    }

    pub fn a(&self) -> &Poly {
        &self.a
    }

    pub fn b(&self) -> &Poly {
        &self.b
    }

    pub fn c(&self) -> &Poly {
        &self.c
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    /// Central elements are exactly those with a = c = 0.
    pub fn is_central(&self) -> bool {
        self.a.is_zero() && self.c.is_zero()
    }

    /// (a1+a2, b1+b2+a1*c2, c1+c2). The cross term a1*c2 has degree at most
    /// 2m <= n, so the result always satisfies the degree bounds.
    pub fn compose(&self, rhs: &HeisenbergElement) -> Result<HeisenbergElement> {
        if self.params != rhs.params {
            return Err(Error::ParamsMismatch);
        }
        let cross = &self.a * &rhs.c;
        let b = &(&self.b + &rhs.b) + &cross;
        debug_assert!(b.degree().is_none_or(|d| d as u64 <= self.params.n));
        Ok(HeisenbergElement {
            params: self.params.clone(),
            a: &self.a + &rhs.a,
            b,
            c: &self.c + &rhs.c,
        })
    }

    /// (-a, -b + a*c, -c); a two-sided inverse under compose.
    pub fn inverse(&self) -> HeisenbergElement {
        let ac = &self.a * &self.c;
        HeisenbergElement {
            params: self.params.clone(),
            a: -&self.a,
            b: &(-&self.b) + &ac,
            c: -&self.c,
        }
    }

    /// 3x3 matrix rendering, for display only.
    pub fn matrix_string(&self) -> String {
        format!(
            "[[1, {}, {}], [0, 1, {}], [0, 0, 1]]",
            self.a, self.b, self.c
        )
    }
}

/// A materialized G_n: the abstract group plus the triple behind each handle.
pub struct HeisGroup {
    pub params: HeisenbergParams,
    pub group: FiniteGroup,
    pub elems: Vec<HeisenbergElement>,
}

fn slot_counts(params: &HeisenbergParams) -> (u64, u64) {
    let q = params.spec.q();
    (q.pow(params.m as u32 + 1), q.pow(params.n as u32 + 1))
}

/// Element handle from the triple's coefficient indices: a outermost, then
/// b, then c, each in coefficient-lexicographic order.
pub fn element_index(e: &HeisenbergElement) -> u64 {
    let (nc, nb) = slot_counts(&e.params);
    let ia = poly_to_index(&e.a, e.params.m);
    let ib = poly_to_index(&e.b, e.params.n);
    let ic = poly_to_index(&e.c, e.params.m);
    (ia * nb + ib) * nc + ic
}

pub fn element_from_index(params: &HeisenbergParams, idx: u64) -> HeisenbergElement {
    let (na, nb) = slot_counts(params);
    let nc = na;
    let ic = idx % nc;
    let ib = (idx / nc) % nb;
    let ia = idx / (nc * nb);
    HeisenbergElement {
        params: params.clone(),
        a: poly_from_index(&params.spec, params.m, ia),
        b: poly_from_index(&params.spec, params.n, ib),
        c: poly_from_index(&params.spec, params.m, ic),
    }
}

/// Materializes G_n as an explicit finite group with an injected composition
/// law; the law is the honest [`HeisenbergElement::compose`] in normal use
/// and a corrupted one in mutation tests.
pub fn materialize_with_law<F>(
    params: &HeisenbergParams,
    guard: &Guard,
    law: F,
) -> Result<HeisGroup>
where
    F: Fn(&HeisenbergElement, &HeisenbergElement) -> HeisenbergElement,
{
    let order_big = params.group_order();
    guard.check_table(
        "unitriangular group table",
        order_big
            .try_into()
            .map_err(|_| Error::GuardExceeded {
                what: "unitriangular group table",
                need: u128::MAX,
                limit: guard.max_table_order,
            })?,
    )?;
    let order: u64 = params
        .group_order()
        .try_into()
        .expect("guarded to table size");
    let elems: Vec<HeisenbergElement> = (0..order)
        .map(|i| element_from_index(params, i))
        .collect();
    let labels = elems.iter().map(|e| e.to_string()).collect();
    let index_law = |a: u32, b: u32| -> u32 {
        let prod = law(&elems[a as usize], &elems[b as usize]);
        element_index(&prod) as u32
    };
    let group = FiniteGroup::from_law(order as usize, index_law, Some(labels), guard)?;
    Ok(HeisGroup {
        params: params.clone(),
        group,
        elems,
    })
}

pub fn materialize(params: &HeisenbergParams, guard: &Guard) -> Result<HeisGroup> {
    materialize_with_law(params, guard, |x, y| {
        x.compose(y).expect("uniform parameters")
    })
}

/// Centralizer of g by the defining equation: (x, y, z) commutes with g iff
/// a_g * z = c_g * x as polynomials. Returns the subgroup of a materialized
/// G_n together with the member handles.
pub fn centralizer_of(
    hg: &HeisGroup,
    g: &HeisenbergElement,
) -> Result<(FiniteGroup, Vec<u32>)> {
    if g.params != hg.params {
        return Err(Error::ParamsMismatch);
    }
    let members: Vec<u32> = hg
        .group
        .elements()
        .filter(|&i| {
            let e = &hg.elems[i as usize];
            &g.a * &e.c == &g.c * &e.a
        })
        .collect();
    Ok((hg.group.subgroup(&members), members))
}

/// When a_g and c_g are both nonzero the centralizer equation reduces by the
/// monic gcd: x = (a_g / d) w and z = (c_g / d) w. Returns (a_g/d, c_g/d).
pub fn reduced_centralizer_direction(g: &HeisenbergElement) -> Result<(Poly, Poly)> {
    let d = crate::algebra::poly::poly_gcd(&g.a, &g.c)?;
    let at = g.a.exact_div(&d).expect("gcd divides");
    let ct = g.c.exact_div(&d).expect("gcd divides");
    Ok((at, ct))
}

/// Per-n report row for the witness family.
#[derive(Debug, Clone)]
pub struct WitnessRow {
    pub n: u64,
    pub m: u64,
    pub group_order: BigUint,
    pub center_order: BigUint,
    /// q^(m+1), the certified lower bound on the abelian-subgroup index.
    pub index_lower_bound: BigUint,
    /// Present when the group fits the exhaustive-search guard.
    pub exhaustive: Option<ExhaustiveWitness>,
}

#[derive(Debug, Clone)]
pub struct ExhaustiveWitness {
    pub max_abelian_order: u64,
    pub observed_index: u64,
    /// Whether the observed index equals the certified bound exactly.
    pub bound_attained: bool,
}

#[derive(Debug, Clone)]
pub struct WitnessReport {
    pub q: u64,
    pub rows: Vec<WitnessRow>,
    /// Whether the bound sequence is strictly increasing across the rows.
    pub strictly_increasing: bool,
}

/// Evaluates the witness family at each n: formula values always, and an
/// exhaustive abelian-subgroup search whenever the group order fits the
/// subgroup guard. Out-of-guard rows are formula-only.
pub fn verify_non_jordan_witness(
    spec: &FieldSpec,
    n_values: &[u64],
    guard: &Guard,
) -> Result<WitnessReport> {
    let mut rows = Vec::with_capacity(n_values.len());
    for &n in n_values {
        let params = HeisenbergParams::new(spec.clone(), n);
        let order = params.group_order();
        let exhaustive = if order <= BigUint::from(guard.max_subgroup_order) {
            let hg = materialize(&params, guard)?;
            let (max_ab, _witness) = subgroups::max_abelian_order(&hg.group);
            let observed_index = hg.group.order() as u64 / max_ab;
            let bound: u64 = params
                .min_abelian_index_bound()
                .try_into()
                .expect("small within guard");
            if BigUint::from(observed_index) < params.min_abelian_index_bound() {
                return Err(Error::InvalidInput(format!(
                    "abelian index {observed_index} undercuts the certified bound {bound} at n = {n}"
                )));
            }
            Some(ExhaustiveWitness {
                max_abelian_order: max_ab,
                observed_index,
                bound_attained: observed_index == bound,
            })
        } else {
            None
        };
        rows.push(WitnessRow {
            n,
            m: params.m,
            group_order: order,
            center_order: params.center_order(),
            index_lower_bound: params.min_abelian_index_bound(),
            exhaustive,
        });
    }
    let strictly_increasing = rows
        .windows(2)
        .all(|w| w[0].index_lower_bound < w[1].index_lower_bound);
    Ok(WitnessReport {
        q: spec.q(),
        rows,
        strictly_increasing,
    })
}
