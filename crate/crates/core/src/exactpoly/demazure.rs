use super::laurent::LaurentPoly;
use super::{PolyError, VarKind};

fn check_index(f: &LaurentPoly, i: usize) -> Result<(), PolyError> {
    let n = f.ambient().n;
    if i == 0 || i >= n {
        return Err(PolyError::BadOperatorIndex {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    Ok(())
}

/// Isobaric divided difference in the `t` variables:
/// `f -> (t_i f - t_{i+1} s_i f) / (t_i - t_{i+1})`.
///
/// Equivalently `(f - (t_{i+1}/t_i) s_i f) / (1 - t_{i+1}/t_i)`. For example
/// `(1-u1*t4)(1-u2*t4)` goes to `1 - u1*u2*t3*t4` under `i = 3`.
pub fn demazure_t(f: &LaurentPoly, i: usize) -> Result<LaurentPoly, PolyError> {
    check_index(f, i)?;
    let a = f.ambient();
    let ti = LaurentPoly::t(a, i);
    let tj = LaurentPoly::t(a, i + 1);
    let swapped = f.swap_adjacent(VarKind::T, i)?;
    let num = &(&ti * f) - &(&tj * &swapped);
    num.exact_divide(&(&ti - &tj))
}

/// The mirrored operator `f -> (t_{i+1} f - t_i s_i f) / (t_{i+1} - t_i)`,
/// i.e. [`demazure_t`] with the roles of `t_i` and `t_{i+1}` exchanged.
pub fn demazure_t_reversed(f: &LaurentPoly, i: usize) -> Result<LaurentPoly, PolyError> {
    check_index(f, i)?;
    let a = f.ambient();
    let ti = LaurentPoly::t(a, i);
    let tj = LaurentPoly::t(a, i + 1);
    let swapped = f.swap_adjacent(VarKind::T, i)?;
    let num = &(&tj * f) - &(&ti * &swapped);
    num.exact_divide(&(&tj - &ti))
}
