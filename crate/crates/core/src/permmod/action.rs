//! How a single `s_i` acts on `s_μ·m`.

use num_bigint::BigInt;
use serde::Serialize;

use super::{s_vector, ModVec};
use crate::error::{Error, Result};
use crate::partition::{strip_remove, x_set, ColumnKind, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ActionCase {
    /// `μ` has an addable node in the column.
    One,
    /// `μ` has a removable node in the column.
    Two,
    /// A step in the rim with nothing to jump to.
    ThreeA,
    /// A step in the rim, resolved by a jump.
    ThreeB,
    /// A flat stretch with nothing to jump to.
    FourA,
    /// A flat stretch, resolved by a jump.
    FourB,
}

/// The value of `s_i s_μ m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SAction {
    /// `-2 s_μ m`.
    ScaleMinusTwo,
    /// `s_{μ⁻} m`.
    Remove(Partition),
    Zero,
    /// `s_λ m` for the partition reached by the jump.
    Jump(Partition),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SActionCase {
    pub case: ActionCase,
    /// The row index `a` of cases three and four.
    pub a: Option<usize>,
    /// The row index `w` picked by a jump.
    pub w: Option<usize>,
    pub result: SAction,
}

impl SActionCase {
    /// The vector this case predicts for `s_i s_μ m`.
    pub fn predicted(&self, mu: &Partition, f: usize, g: usize) -> Result<ModVec> {
        match &self.result {
            SAction::ScaleMinusTwo => Ok(s_vector(mu, f, g)?.scaled(&BigInt::from(-2))),
            SAction::Remove(l) | SAction::Jump(l) => s_vector(l, f, g),
            SAction::Zero => Ok(ModVec::zero(f, g)),
        }
    }
}

fn check_index(mu: &Partition, i: usize, f: usize, g: usize) -> Result<()> {
    if !mu.fits_box(f, g) {
        return Err(Error::BoxMismatch {
            partition: mu.to_string(),
            f,
            g,
        });
    }
    if i == 0 || i >= f + g {
        return Err(Error::IndexOutOfRange {
            index: i,
            bound: f + g,
        });
    }
    Ok(())
}

/// Classifies `s_i s_μ m` for `μ` in the `f × g` box. The column is
/// `j = i - g`.
pub fn s_action_case(mu: &Partition, i: usize, f: usize, g: usize) -> Result<SActionCase> {
    check_index(mu, i, f, g)?;
    let k = (f + g) as i64;
    let i = i as i64;
    let g = g as i64;
    let j = i - g;
    // Parts with μ_0 = ∞ and zeros beyond the length.
    let part = |r: i64| -> i64 {
        if r == 0 {
            i64::MAX
        } else {
            mu.part(r) as i64
        }
    };
    let plain = |case, result| SActionCase {
        case,
        a: None,
        w: None,
        result,
    };
    match mu.column_kind(j) {
        ColumnKind::Addable(_) => return Ok(plain(ActionCase::One, SAction::ScaleMinusTwo)),
        ColumnKind::Removable(n) => {
            return Ok(plain(ActionCase::Two, SAction::Remove(mu.remove_node(n)?)))
        }
        ColumnKind::Neither => {}
    }
    let build = |pieces: Vec<i64>| -> Result<Partition> {
        Partition::new(pieces.into_iter().map(|p| p as usize).collect())
    };

    if let Some(a) = (0..=g).find(|&a| part(a) > j + a && j + a > part(a + 1)) {
        let w = (a + 1..=g).find(|&w| part(w) >= j + 2 * a - w);
        let Some(w) = w else {
            return Ok(SActionCase {
                case: ActionCase::ThreeA,
                a: Some(a as usize),
                w: None,
                result: SAction::Zero,
            });
        };
        let mut pieces: Vec<i64> = (1..=a).map(part).collect();
        pieces.push(j + a);
        pieces.extend((a + 1..w).map(|r| part(r) + 1));
        pieces.extend((w + 1..=g).map(part));
        return Ok(SActionCase {
            case: ActionCase::ThreeB,
            a: Some(a as usize),
            w: Some(w as usize),
            result: SAction::Jump(build(pieces)?),
        });
    }

    if let Some(a) = (1..g).find(|&a| part(a) == j + a && part(a + 1) == j + a) {
        let reaches = |w: i64| part(w) >= j + 2 * a - w;
        if i + 2 * a > k && !(1..a).any(reaches) {
            return Ok(SActionCase {
                case: ActionCase::FourA,
                a: Some(a as usize),
                w: None,
                result: SAction::Zero,
            });
        }
        let w = (1..a).rev().find(|&w| reaches(w)).unwrap_or(0);
        let mut pieces: Vec<i64> = (1..=w).map(part).collect();
        pieces.push(j + 2 * a - w);
        pieces.extend((w + 1..a).map(|r| part(r) + 1));
        pieces.extend((a + 1..=g).map(part));
        return Ok(SActionCase {
            case: ActionCase::FourB,
            a: Some(a as usize),
            w: Some(w as usize),
            result: SAction::Jump(build(pieces)?),
        });
    }

    Err(Error::Internal(format!("no case applies to s_{i} on {mu}")))
}

/// The two jump relations between `μ` and `λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Harpoon {
    /// The jump of case three.
    Right,
    /// The jump of case four.
    Left,
}

/// Tests whether `s_i` jumps from `μ` to `λ` in the given direction, using
/// the strip description: `λ` has an addable node in column `j` and `μ` is
/// `λ^[x]` for some negative `x` (right) or positive `x` (left).
pub fn harp_check(
    mu: &Partition,
    lambda: &Partition,
    i: usize,
    f: usize,
    g: usize,
    dir: Harpoon,
) -> Result<bool> {
    check_index(mu, i, f, g)?;
    check_index(lambda, i, f, g)?;
    let j = i as i64 - g as i64;
    let Ok(set) = x_set(lambda, j) else {
        return Ok(false);
    };
    let xs: Vec<i64> = match dir {
        Harpoon::Right => set.negative().collect(),
        Harpoon::Left => set.positive().collect(),
    };
    for x in xs {
        if &strip_remove(lambda, j, x)? == mu {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The same relation read off the case analysis of `s_i s_μ m`.
pub fn harp_check_direct(
    mu: &Partition,
    lambda: &Partition,
    i: usize,
    f: usize,
    g: usize,
    dir: Harpoon,
) -> Result<bool> {
    check_index(lambda, i, f, g)?;
    let c = s_action_case(mu, i, f, g)?;
    let wanted = match dir {
        Harpoon::Right => ActionCase::ThreeB,
        Harpoon::Left => ActionCase::FourB,
    };
    Ok(c.case == wanted && c.result == SAction::Jump(lambda.clone()))
}

/// The coefficient of `s_λ m` in `s_i s_μ m`, from the rim of `λ` alone.
pub fn s_coefficient(
    lambda: &Partition,
    mu: &Partition,
    i: usize,
    f: usize,
    g: usize,
) -> Result<i64> {
    check_index(mu, i, f, g)?;
    check_index(lambda, i, f, g)?;
    let j = i as i64 - g as i64;
    let ColumnKind::Addable(node) = lambda.column_kind(j) else {
        return Ok(0);
    };
    if lambda == mu {
        return Ok(-2);
    }
    if &lambda.add_node(node)? == mu {
        return Ok(1);
    }
    let set = x_set(lambda, j)?;
    for &x in &set.values {
        if &strip_remove(lambda, j, x)? == mu {
            return Ok(1);
        }
    }
    Ok(0)
}
