//! Exact arithmetic foundation: big integers, prime-power finite fields, and
//! polynomials over them.

pub mod field;
pub mod int;
pub mod poly;

pub use field::{element_order, FieldElement, FieldSpec};
pub use int::{factor, is_prime, isqrt, isqrt_u64, prime_power};
pub use poly::{enumerate_polys, poly_from_index, poly_gcd, poly_to_index, Poly};
