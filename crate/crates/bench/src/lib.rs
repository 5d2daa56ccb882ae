//! Shared fixtures for the criterion benchmarks.

use plethysm::field::Field;
use plethysm::repmod::Rep;

/// GF(2) and the natural module, the workhorse setting of the benchmarks.
pub fn gf2_natural() -> (Field, Rep) {
    let field = Field::gf(2).unwrap();
    let e = Rep::natural(&field);
    (field, e)
}
