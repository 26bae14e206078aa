//! Exact inclusion between basic sets.
//!
//! Same-family pairs and the cross-family pairs that arise in
//! continuity checking are decided by closed forms. For the remaining
//! cross-family pairs a witness is searched along the inner set's
//! canonical enumeration; exhausting the search depth is surfaced as an
//! explicit undecided error, never silently treated as inclusion.

use serde::{Deserialize, Serialize};

use bicyclic_core::{BicyclicElem, ExtElem};

use crate::error::TopologyError;
use crate::family::{prime_power, FamilyKind};
use crate::nbhd::BasicNbhd;

/// How far the generic fallback walks the inner enumeration before
/// giving up.
const FALLBACK_DEPTH: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SubsetVerdict {
    Subset,
    NotSubset { witness: ExtElem },
}

impl SubsetVerdict {
    pub fn is_subset(&self) -> bool {
        matches!(self, SubsetVerdict::Subset)
    }
}

/// Signed diagonal offset `d` with `x = y + (d, d)`, if one exists.
pub(crate) fn diag_offset(x: BicyclicElem, y: BicyclicElem) -> Option<i128> {
    let di = x.i as i128 - y.i as i128;
    let dj = x.j as i128 - y.j as i128;
    (di == dj).then_some(di)
}

/// Does `p2^m` divide `p1^n`? Exact, with no power materialized.
fn power_divides_power(p1: u64, n: u64, p2: u64, m: u64) -> bool {
    if m == 0 {
        return true;
    }
    p1 == p2 && n >= m
}

/// Decide `inner ⊆ outer`.
pub fn nbhd_subset(
    inner: &BasicNbhd,
    outer: &BasicNbhd,
) -> Result<SubsetVerdict, TopologyError> {
    if inner.family().carrier() != outer.family().carrier() {
        return Err(TopologyError::CarrierMismatch(
            inner.family().carrier(),
            outer.family().carrier(),
        ));
    }

    // Single-point inner: membership decides.
    if let Some(x) = inner.singleton() {
        return Ok(if outer.contains(&x)? {
            SubsetVerdict::Subset
        } else {
            SubsetVerdict::NotSubset { witness: x }
        });
    }
    // Single-point outer with an infinite inner: some member escapes.
    if let Some(y) = outer.singleton() {
        let witness = inner
            .enumerate(2)
            .into_iter()
            .find(|mem| *mem != y)
            .expect("non-singleton basics have at least two members");
        return Ok(SubsetVerdict::NotSubset { witness });
    }

    use FamilyKind::*;
    match (inner.family().kind(), outer.family().kind()) {
        (DiagTail, DiagTail) => Ok(diag_in_diag(inner, outer)),
        (CofiniteBlock, CofiniteBlock) => Ok(block_in_block(inner, outer)),
        (ZeroCompact, ZeroCompact) => Ok(zero_in_zero(inner, outer)),
        (PadicOmega, PadicOmega) | (PadicPlus, PadicPlus) | (PadicMinus, PadicMinus) => {
            progression_in_progression(inner, outer)
        }
        (DiagTail, CofiniteBlock) => Ok(diag_in_block(inner, outer)),
        (PadicPlus, CofiniteBlock) => Ok(progression_in_block(inner, outer)),
        _ => fallback_search(inner, outer),
    }
}

fn diag_in_diag(inner: &BasicNbhd, outer: &BasicNbhd) -> SubsetVerdict {
    let (x, n) = (inner.center_elem(), inner.param());
    let (y, m) = (outer.center_elem(), outer.param());
    match diag_offset(x, y) {
        // Off-diagonal centers never see each other's tails.
        None => SubsetVerdict::NotSubset { witness: inner.center() },
        Some(d) if d < 0 => SubsetVerdict::NotSubset { witness: inner.center() },
        Some(0) => {
            if n >= m {
                SubsetVerdict::Subset
            } else {
                // the (n+1)-translate sits inside the outer gap
                SubsetVerdict::NotSubset {
                    witness: ExtElem::elem(x.i + n + 1, x.j + n + 1),
                }
            }
        }
        Some(d) => {
            // d > 0: the inner center itself must clear the outer gap;
            // past it the whole inner tail does too.
            if (d as u64) > m {
                SubsetVerdict::Subset
            } else {
                SubsetVerdict::NotSubset { witness: inner.center() }
            }
        }
    }
}

fn block_in_block(inner: &BasicNbhd, outer: &BasicNbhd) -> SubsetVerdict {
    let (x, n) = (inner.center_elem(), inner.param());
    let (y, m) = (outer.center_elem(), outer.param());
    let carrier = inner.family().carrier();

    let center_ok = x == y || x.i > m || x.j > m;
    if !center_ok {
        return SubsetVerdict::NotSubset { witness: inner.center() };
    }
    // Points outside the inner block but inside the outer block escape,
    // unless the single allowance (the outer center) covers them.
    for i in 0..=m {
        for j in 0..=m {
            if i <= n && j <= n {
                continue;
            }
            let e = BicyclicElem::new(i, j);
            if !bicyclic_core::in_carrier(e, carrier).expect("plain carrier") {
                continue;
            }
            if e != y {
                return SubsetVerdict::NotSubset { witness: ExtElem::Elem(e) };
            }
        }
    }
    SubsetVerdict::Subset
}

fn zero_in_zero(inner: &BasicNbhd, outer: &BasicNbhd) -> SubsetVerdict {
    // Both centers are zero here; plain centers are singleton-handled.
    let (n, m) = (inner.param(), outer.param());
    if n >= m {
        SubsetVerdict::Subset
    } else {
        SubsetVerdict::NotSubset { witness: ExtElem::elem(0, n) }
    }
}

/// Row/column progressions: inner `{start1 + P1·t}` on line `r1`,
/// outer `{start2 + P2·t}` on line `r2`. Inclusion needs the same
/// line, a start inside the outer progression, and `P2 | P1`.
fn progression_in_progression(
    inner: &BasicNbhd,
    outer: &BasicNbhd,
) -> Result<SubsetVerdict, TopologyError> {
    let minus = inner.family().kind() == FamilyKind::PadicMinus;
    let line = |e: BicyclicElem| if minus { e.j } else { e.i };
    let along = |e: BicyclicElem| if minus { e.i } else { e.j };

    let (c1, n1, p1) = (inner.center_elem(), inner.param(), inner.family().prime().unwrap());
    let (c2, m, p2) = (outer.center_elem(), outer.param(), outer.family().prime().unwrap());

    let same_line = line(c1) == line(c2);
    let start_reachable = same_line
        && along(c1) >= along(c2)
        && crate::family::power_divides(p2, m, along(c1) - along(c2));
    if !start_reachable {
        return Ok(SubsetVerdict::NotSubset { witness: inner.center() });
    }
    if power_divides_power(p1, n1, p2, m) {
        return Ok(SubsetVerdict::Subset);
    }
    // Steps incompatible: the second inner member leaves the outer
    // residue class.
    let step = prime_power(p1, n1)
        .ok_or_else(|| TopologyError::Overflow(format!("{p1}^{n1}")))?;
    let second = along(c1) as u128 + step;
    if second > u64::MAX as u128 {
        return Err(TopologyError::Overflow(format!("witness exponent {second}")));
    }
    let witness = if minus {
        ExtElem::elem(second as u64, c1.j)
    } else {
        ExtElem::elem(c1.i, second as u64)
    };
    Ok(SubsetVerdict::NotSubset { witness })
}

fn diag_in_block(inner: &BasicNbhd, outer: &BasicNbhd) -> SubsetVerdict {
    let (x, n) = (inner.center_elem(), inner.param());
    let (y, m) = (outer.center_elem(), outer.param());

    let center_ok = x == y || x.i > m || x.j > m;
    if !center_ok {
        return SubsetVerdict::NotSubset { witness: inner.center() };
    }
    // Tail translates still inside the outer block must hit its center.
    let reach = m.saturating_sub(x.i.max(x.j));
    let mut l = n + 1;
    while l <= reach {
        let t = BicyclicElem::new(x.i + l, x.j + l);
        if t != y {
            return SubsetVerdict::NotSubset { witness: ExtElem::Elem(t) };
        }
        l += 1;
    }
    SubsetVerdict::Subset
}

fn progression_in_block(inner: &BasicNbhd, outer: &BasicNbhd) -> SubsetVerdict {
    let (c, n) = (inner.center_elem(), inner.param());
    let (y, m) = (outer.center_elem(), outer.param());
    let p = inner.family().prime().unwrap();

    if c.i > m {
        return SubsetVerdict::Subset; // the whole row clears the block
    }
    match prime_power(p, n) {
        None => {
            // only the start is representable; it must be covered
            if c == y || c.j > m {
                SubsetVerdict::Subset
            } else {
                SubsetVerdict::NotSubset { witness: inner.center() }
            }
        }
        Some(step) => {
            let mut along = c.j as u128;
            while along <= m as u128 {
                let e = BicyclicElem::new(c.i, along as u64);
                if e != y {
                    return SubsetVerdict::NotSubset { witness: ExtElem::Elem(e) };
                }
                along += step;
            }
            SubsetVerdict::Subset
        }
    }
}

fn fallback_search(
    inner: &BasicNbhd,
    outer: &BasicNbhd,
) -> Result<SubsetVerdict, TopologyError> {
    for member in inner.enumerate(FALLBACK_DEPTH) {
        if !outer.contains(&member)? {
            return Ok(SubsetVerdict::NotSubset { witness: member });
        }
    }
    Err(TopologyError::UndecidedInclusion {
        inner: inner.family().kind(),
        outer: outer.family().kind(),
        depth: FALLBACK_DEPTH,
    })
}
