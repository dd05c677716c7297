//! Closed formulas for genus-0 Hurwitz numbers with four branch points, and
//! for the three-point types `(d; e1-e2, e3, e4)`.

use super::RamificationType;
use crate::error::{Error, Result};

fn check_range(d: usize, es: &[usize]) -> Result<()> {
    if let Some(&e) = es.iter().find(|&&e| e < 2 || e > d) {
        return Err(Error::InvalidType(format!("cycle length {e} outside [2, {d}]")));
    }
    Ok(())
}

/// `h(d; e1, e2, e3, e4) = min_i e_i (d + 1 - e_i)` for single-cycle classes
/// with `Σ e_i = 2d + 2`.
pub fn hurwitz_formula_pure4(d: usize, e: [usize; 4]) -> Result<u64> {
    check_range(d, &e)?;
    let sum: usize = e.iter().sum();
    if sum != 2 * d + 2 {
        return Err(Error::GenusCondition(format!("Σe={sum} ≠ 2d+2={}", 2 * d + 2)));
    }
    Ok(e.iter().map(|&ei| (ei * (d + 1 - ei)) as u64).min().expect("four entries"))
}

/// `h(d; e1-e2, e3, e4)` for a class with two cycles and two single cycles,
/// `e1 + e2 + e3 + e4 = 2d + 2`, `e1 + e2 <= d`.
///
/// For `e1 != e2`: `(d+1-e1-e2) * min(e1, e2, d+1-e3, d+1-e4)`.
/// For `e1 == e2`: `ceil((d+1-2e1) * min(d+1-e3, d+1-e4) / 2)`.
pub fn hurwitz_formula_badtype(d: usize, e1: usize, e2: usize, e3: usize, e4: usize) -> Result<u64> {
    check_range(d, &[e1, e2, e3, e4])?;
    let sum = e1 + e2 + e3 + e4;
    if sum != 2 * d + 2 {
        return Err(Error::GenusCondition(format!("Σe={sum} ≠ 2d+2={}", 2 * d + 2)));
    }
    if e1 + e2 > d {
        return Err(Error::InvalidType(format!("{e1}-{e2} needs more than {d} points")));
    }
    let a = (d + 1 - e1 - e2) as u64;
    let (f3, f4) = ((d + 1 - e3) as u64, (d + 1 - e4) as u64);
    Ok(if e1 != e2 {
        a * (e1 as u64).min(e2 as u64).min(f3).min(f4)
    } else {
        (a * f3.min(f4)).div_ceil(2)
    })
}

/// Dispatch to a closed formula when one applies: three single cycles (one
/// cover), four single cycles, or a two-cycle class with two single cycles.
pub fn hurwitz_formula(t: &RamificationType) -> Result<u64> {
    t.require_genus_zero()?;
    let d = t.degree();
    if let Some(e) = t.pure_exponents() {
        return match e.len() {
            3 => Ok(1),
            4 => hurwitz_formula_pure4(d, [e[0], e[1], e[2], e[3]]),
            r => Err(Error::Unsupported(format!("no closed formula for {r} branch points"))),
        };
    }
    if let Some((e1, e2, e3, e4)) = t.two_cycle_exponents() {
        return hurwitz_formula_badtype(d, e1, e2, e3, e4);
    }
    Err(Error::Unsupported(format!("no closed formula for type {t}")))
}
