//! Transporting continuity suites to the negative submonoid through
//! the exponent-swap duality, with independent spot verification.

use serde::{Deserialize, Serialize};

use bicyclic_core::{box_elems, Carrier, ExtElem};
use bicyclic_topologies::{BasicNbhd, Family};

use crate::checker::check_shift_continuity;
use crate::error::ContinuityError;
use crate::shift::{ShiftSpec, Side};
use crate::verdict::{ContinuityVerdict, EscapeEntry};

/// One checked shift within a suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftCheck {
    pub side: Side,
    pub s: ExtElem,
    pub point: ExtElem,
    pub verdict: ContinuityVerdict,
}

/// A family-wide collection of shift checks at a common parameter
/// bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftSuite {
    pub family: Family,
    pub param_bound: u64,
    pub entries: Vec<ShiftCheck>,
}

/// Both-sided shift checks for every pair of shifting element and
/// point in the box, in the positive progression topology.
pub fn padic_shift_suite(
    p: u64,
    elem_bound: u64,
    param_bound: u64,
) -> Result<ShiftSuite, ContinuityError> {
    let family = Family::padic_plus(p)?;
    let elems = box_elems(Carrier::CPlus, elem_bound);
    let mut entries = Vec::new();
    for side in [Side::Left, Side::Right] {
        for s in &elems {
            for point in &elems {
                let spec = ShiftSpec::new(side, ExtElem::Elem(*s), family, ExtElem::Elem(*point))?;
                entries.push(ShiftCheck {
                    side,
                    s: ExtElem::Elem(*s),
                    point: ExtElem::Elem(*point),
                    verdict: check_shift_continuity(&spec, param_bound)?,
                });
            }
        }
    }
    Ok(ShiftSuite { family, param_bound, entries })
}

/// One spot verification of a dualized entry, done by raw negative-side
/// computation rather than through the checker.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpotCheck {
    pub index: usize,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualReport {
    pub suite: ShiftSuite,
    pub spot_checks: Vec<SpotCheck>,
    pub mismatches: u64,
}

/// Map a positive-side suite through the exponent swap: sides flip,
/// every element and basic is swapped, verdict variants are preserved.
/// A deterministic sample of the dualized entries is re-verified by
/// direct computation in the negative submonoid, and every entry is
/// cross-checked against the checker run on the dual spec.
pub fn dual_report(suite: &ShiftSuite, sample: usize) -> Result<DualReport, ContinuityError> {
    let p = suite.family.prime().ok_or_else(|| {
        ContinuityError::InvalidSpec("dual transport is defined for the progression families".into())
    })?;
    if suite.family.kind() != bicyclic_topologies::FamilyKind::PadicPlus {
        return Err(ContinuityError::InvalidSpec(format!(
            "dual transport starts from the positive progression family, got {}",
            suite.family
        )));
    }
    let dual_family = Family::padic_minus(p)?;

    let mut entries = Vec::with_capacity(suite.entries.len());
    let mut mismatches = 0u64;
    for entry in &suite.entries {
        let dual_verdict = dualize_entry_verdict(&entry.verdict)?;
        // the checker on the dual spec must land on the same structure
        let spec = ShiftSpec::new(
            entry.side.flipped(),
            entry.s.dual(),
            dual_family,
            entry.point.dual(),
        )?;
        let checked = check_shift_continuity(&spec, suite.param_bound)?;
        if checked.variant_name() != dual_verdict.variant_name()
            || checked.witness_table() != dual_verdict.witness_table()
        {
            mismatches += 1;
        }
        entries.push(ShiftCheck {
            side: entry.side.flipped(),
            s: entry.s.dual(),
            point: entry.point.dual(),
            verdict: dual_verdict,
        });
    }

    let dual_suite = ShiftSuite {
        family: dual_family,
        param_bound: suite.param_bound,
        entries,
    };

    // deterministic stride sample, re-verified from scratch
    let stride = (dual_suite.entries.len() / sample.max(1)).max(1);
    let mut spot_checks = Vec::new();
    for (index, entry) in dual_suite.entries.iter().enumerate().step_by(stride) {
        if spot_checks.len() >= sample {
            break;
        }
        let (ok, detail) = verify_entry_directly(&dual_family, dual_suite.param_bound, entry)?;
        if !ok {
            mismatches += 1;
        }
        spot_checks.push(SpotCheck { index, ok, detail });
    }

    Ok(DualReport { suite: dual_suite, spot_checks, mismatches })
}

fn dualize_entry_verdict(v: &ContinuityVerdict) -> Result<ContinuityVerdict, ContinuityError> {
    Ok(match v {
        ContinuityVerdict::Discontinuous { offending, escapes, bound, rule } => {
            ContinuityVerdict::Discontinuous {
                offending: offending.dualize()?,
                escapes: escapes
                    .iter()
                    .map(|e| EscapeEntry {
                        source_param: e.source_param,
                        escaper: e.escaper.dual(),
                        image: e.image.dual(),
                    })
                    .collect(),
                bound: *bound,
                rule: rule.clone(),
            }
        }
        other => other.clone(),
    })
}

/// Re-verify a dualized verdict with nothing but negative-side
/// multiplication and membership.
fn verify_entry_directly(
    family: &Family,
    param_bound: u64,
    entry: &ShiftCheck,
) -> Result<(bool, String), ContinuityError> {
    let spec = ShiftSpec::new(entry.side, entry.s, *family, entry.point)?;
    let target = spec.apply(&entry.point)?;
    match &entry.verdict {
        ContinuityVerdict::ContinuousExact { table, .. }
        | ContinuityVerdict::ContinuousUpToBound { table, .. } => {
            for row in table.iter().take(4) {
                let v = BasicNbhd::new(*family, target, row.target_param)?;
                let src = BasicNbhd::new(*family, entry.point, row.source_param)?;
                for u in src.enumerate(40) {
                    let image = spec.apply(&u)?;
                    if !v.contains(&image)? {
                        return Ok((
                            false,
                            format!("{u} maps to {image} outside the {}-basic", row.target_param),
                        ));
                    }
                }
            }
            Ok((true, format!("{} witness rows re-verified", table.len().min(4))))
        }
        ContinuityVerdict::Discontinuous { offending, escapes, .. } => {
            if escapes.len() as u64 != param_bound + 1 {
                return Ok((false, "escape list does not cover the bound".into()));
            }
            for e in escapes {
                let src = BasicNbhd::new(*family, entry.point, e.source_param)?;
                if !src.contains(&e.escaper)? {
                    return Ok((false, format!("{} is not in its source basic", e.escaper)));
                }
                let image = spec.apply(&e.escaper)?;
                if image != e.image {
                    return Ok((false, format!("recorded image of {} is stale", e.escaper)));
                }
                if offending.contains(&image)? {
                    return Ok((false, format!("{image} did not escape the target")));
                }
            }
            Ok((true, format!("{} escapes re-verified", escapes.len())))
        }
        ContinuityVerdict::Inconclusive { reason } => {
            Ok((false, format!("inconclusive entry in suite: {reason}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_suite_mirrors_and_verifies() {
        let suite = padic_shift_suite(2, 3, 4).unwrap();
        assert!(!suite.entries.is_empty());
        let report = dual_report(&suite, 25).unwrap();
        assert_eq!(report.mismatches, 0);
        assert_eq!(report.spot_checks.len(), 25);
        assert!(report.spot_checks.iter().all(|s| s.ok));

        // left-exact entries dualize to right-exact entries
        for (orig, dualed) in suite.entries.iter().zip(report.suite.entries.iter()) {
            assert_eq!(orig.side.flipped(), dualed.side);
            assert_eq!(
                orig.verdict.variant_name(),
                dualed.verdict.variant_name()
            );
        }
    }
}
