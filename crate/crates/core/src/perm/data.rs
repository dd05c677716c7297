//! Generator sets shipped with the crate (see `data/groups/` for provenance).

use super::GeneratorSet;

pub const M11: &str = include_str!("../../data/groups/m11.txt");
pub const M23: &str = include_str!("../../data/groups/m23.txt");
pub const PGAML2_16: &str = include_str!("../../data/groups/pgaml2_16.txt");

pub fn m11() -> GeneratorSet {
    M11.parse().expect("bundled M11 data parses")
}

pub fn m23() -> GeneratorSet {
    M23.parse().expect("bundled M23 data parses")
}

/// PΓL(2,16) on the 17 points of the projective line over GF(16).
pub fn pgaml2_16() -> GeneratorSet {
    PGAML2_16.parse().expect("bundled PGammaL(2,16) data parses")
}
