//! Cofiniteness of basic sets and the compactness certificates built
//! on it.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use bicyclic_core::{box_elems, Carrier, ExtElem};

use crate::error::TopologyError;
use crate::family::{Family, FamilyKind};
use crate::nbhd::BasicNbhd;

/// Either the exact finite complement, or a description of an infinite
/// family of missed points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CofiniteVerdict {
    Cofinite { complement: BTreeSet<ExtElem> },
    NotCofinite { missed: String },
}

impl CofiniteVerdict {
    pub fn is_cofinite(&self) -> bool {
        matches!(self, CofiniteVerdict::Cofinite { .. })
    }
}

/// Decide whether a basic set is cofinite in its carrier, returning the
/// complement exactly when it is.
pub fn nbhd_is_cofinite(b: &BasicNbhd) -> CofiniteVerdict {
    let n = b.param();
    match b.family().kind() {
        FamilyKind::CofiniteBlock => {
            // complement = (block ∩ carrier) ∖ {center}
            let complement: BTreeSet<ExtElem> = box_elems(b.family().carrier(), n)
                .into_iter()
                .map(ExtElem::Elem)
                .filter(|x| *x != b.center())
                .collect();
            CofiniteVerdict::Cofinite { complement }
        }
        FamilyKind::ZeroCompact => match b.center() {
            ExtElem::Zero => {
                let mut complement = BTreeSet::new();
                for j in 0..n {
                    for i in 0..=j {
                        complement.insert(ExtElem::elem(i, j));
                    }
                }
                CofiniteVerdict::Cofinite { complement }
            }
            center => CofiniteVerdict::NotCofinite {
                missed: format!(
                    "the singleton {{{center}}} misses every other point of the \
                     zero-adjoined monoid"
                ),
            },
        },
        FamilyKind::Discrete => CofiniteVerdict::NotCofinite {
            missed: format!(
                "the singleton {{{}}} misses the rest of the infinite carrier",
                b.center()
            ),
        },
        FamilyKind::DiagTail => {
            let c = b.center_elem();
            CofiniteVerdict::NotCofinite {
                missed: format!(
                    "misses the infinite off-diagonal set {{({}, {}+1+l) : l ∈ ω}}",
                    c.i, c.j
                ),
            }
        }
        FamilyKind::PadicPlus => CofiniteVerdict::NotCofinite {
            missed: format!(
                "every member has b-exponent {}; all other rows are missed",
                b.center_elem().i
            ),
        },
        FamilyKind::PadicMinus => CofiniteVerdict::NotCofinite {
            missed: format!(
                "every member has a-exponent {}; all other columns are missed",
                b.center_elem().j
            ),
        },
        FamilyKind::PadicOmega => {
            let c = b.center_elem();
            if n == 0 {
                // step 1: the set is the whole tail from the center
                let complement: BTreeSet<ExtElem> =
                    (0..c.j).map(|t| ExtElem::elem(0, t)).collect();
                CofiniteVerdict::Cofinite { complement }
            } else {
                CofiniteVerdict::NotCofinite {
                    missed: format!(
                        "misses the infinitely many naturals off the residue of {} \
                         modulo {}^{}",
                        c.j,
                        b.family().prime().unwrap(),
                        n
                    ),
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CompactnessVerdict {
    /// Every inspected basic has a finite complement; `anchor`
    /// describes where cofiniteness is anchored and `complement_rule`
    /// the exact cardinality of those complements.
    CompactByCofinite {
        anchor: String,
        complement_rule: String,
    },
    NoCertificate { reason: String },
}

impl CompactnessVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, CompactnessVerdict::CompactByCofinite { .. })
    }
}

/// Cofinite-based compactness certificate, inspected up to truncation
/// `trunc` in both the center box and the parameter.
///
/// The zero-adjoined family is discrete off zero with every basic at
/// zero cofinite; the cofinite-block family is cofinite at every
/// point. Both patterns make every basic cover finite off a covered
/// remainder, which is what the certificate records.
pub fn compactness_certificate(
    family: &Family,
    trunc: u64,
) -> Result<CompactnessVerdict, TopologyError> {
    match family.kind() {
        FamilyKind::ZeroCompact => {
            for n in 0..=trunc {
                let b = BasicNbhd::new(*family, ExtElem::Zero, n)?;
                match nbhd_is_cofinite(&b) {
                    CofiniteVerdict::Cofinite { complement } => {
                        let expected = (n * (n + 1) / 2) as usize;
                        if complement.len() != expected {
                            return Ok(CompactnessVerdict::NoCertificate {
                                reason: format!(
                                    "complement of the {n}-basic at zero has \
                                     {} elements, expected {expected}",
                                    complement.len()
                                ),
                            });
                        }
                    }
                    CofiniteVerdict::NotCofinite { missed } => {
                        return Ok(CompactnessVerdict::NoCertificate {
                            reason: format!("basic at zero not cofinite: {missed}"),
                        });
                    }
                }
            }
            Ok(CompactnessVerdict::CompactByCofinite {
                anchor: "the adjoined zero; all other points are isolated".into(),
                complement_rule: "|complement of the n-basic at zero| = n(n+1)/2".into(),
            })
        }
        FamilyKind::CofiniteBlock => {
            for center in box_elems(family.carrier(), trunc) {
                for n in 0..=trunc {
                    let b = BasicNbhd::new(*family, ExtElem::Elem(center), n)?;
                    if !nbhd_is_cofinite(&b).is_cofinite() {
                        return Ok(CompactnessVerdict::NoCertificate {
                            reason: format!("basic at {center} with n={n} not cofinite"),
                        });
                    }
                }
            }
            let rule = match family.carrier() {
                Carrier::Full => "|complement| = (n+1)^2 − [center inside the block]",
                _ => "|complement| = (n+1)(n+2)/2 − [center inside the block]",
            };
            Ok(CompactnessVerdict::CompactByCofinite {
                anchor: "every point".into(),
                complement_rule: rule.into(),
            })
        }
        kind => Ok(CompactnessVerdict::NoCertificate {
            reason: format!("{kind:?} basics are not cofinite on an infinite carrier"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_basic_complements() {
        let b = BasicNbhd::new(Family::zero_compact(), ExtElem::Zero, 3).unwrap();
        match nbhd_is_cofinite(&b) {
            CofiniteVerdict::Cofinite { complement } => {
                assert_eq!(complement.len(), 6);
                assert!(complement.contains(&ExtElem::elem(1, 2)));
                assert!(!complement.contains(&ExtElem::elem(0, 3)));
            }
            other => panic!("expected cofinite, got {other:?}"),
        }
    }

    #[test]
    fn block_complements() {
        let fam = Family::cofinite_block(Carrier::Full).unwrap();
        let b = BasicNbhd::new(fam, ExtElem::elem(0, 0), 2).unwrap();
        match nbhd_is_cofinite(&b) {
            CofiniteVerdict::Cofinite { complement } => assert_eq!(complement.len(), 8),
            other => panic!("expected cofinite, got {other:?}"),
        }
    }

    #[test]
    fn non_cofinite_families() {
        let b = BasicNbhd::new(Family::discrete(Carrier::Full), ExtElem::elem(0, 0), 0).unwrap();
        assert!(!nbhd_is_cofinite(&b).is_cofinite());

        let fam = Family::padic_plus(2).unwrap();
        let b = BasicNbhd::new(fam, ExtElem::elem(1, 2), 0).unwrap();
        assert!(!nbhd_is_cofinite(&b).is_cofinite());

        let fam = Family::diag_tail(Carrier::Full).unwrap();
        let b = BasicNbhd::new(fam, ExtElem::elem(1, 2), 1).unwrap();
        assert!(!nbhd_is_cofinite(&b).is_cofinite());
    }

    #[test]
    fn omega_step_one_is_cofinite() {
        let fam = Family::padic_omega(2).unwrap();
        let b = BasicNbhd::new(fam, ExtElem::elem(0, 3), 0).unwrap();
        match nbhd_is_cofinite(&b) {
            CofiniteVerdict::Cofinite { complement } => assert_eq!(complement.len(), 3),
            other => panic!("expected cofinite, got {other:?}"),
        }
        let b = BasicNbhd::new(fam, ExtElem::elem(0, 3), 1).unwrap();
        assert!(!nbhd_is_cofinite(&b).is_cofinite());
    }

    #[test]
    fn certificates() {
        assert!(compactness_certificate(&Family::zero_compact(), 20)
            .unwrap()
            .is_certified());
        let tauc = Family::cofinite_block(Carrier::Full).unwrap();
        assert!(compactness_certificate(&tauc, 8).unwrap().is_certified());
        let taup = Family::padic_plus(2).unwrap();
        assert!(!compactness_certificate(&taup, 8).unwrap().is_certified());
    }
}
