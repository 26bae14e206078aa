//! Parametric basic open sets with exact membership and canonical
//! enumeration.

use serde::{Deserialize, Serialize};

use bicyclic_core::{BicyclicElem, Carrier, ExtElem};

use crate::error::TopologyError;
use crate::family::{power_divides, prime_power, Family, FamilyKind};

/// One basic open set: a family, a center in the family's carrier, and
/// the natural parameter `n`. Along every parameter chain the sets
/// shrink: the `(n+1)`-basic at a center is contained in the `n`-basic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "NbhdRepr", into = "NbhdRepr")]
pub struct BasicNbhd {
    family: Family,
    center: ExtElem,
    param: u64,
}

// Wire shape: {"family": "...", "carrier": "...", "p": 2, "center": ..., "n": ...}
#[derive(Serialize, Deserialize)]
struct NbhdRepr {
    family: FamilyKind,
    carrier: Carrier,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
    center: ExtElem,
    n: u64,
}

impl From<BasicNbhd> for NbhdRepr {
    fn from(b: BasicNbhd) -> NbhdRepr {
        NbhdRepr {
            family: b.family.kind(),
            carrier: b.family.carrier(),
            p: b.family.prime(),
            center: b.center,
            n: b.param,
        }
    }
}

impl TryFrom<NbhdRepr> for BasicNbhd {
    type Error = TopologyError;

    fn try_from(r: NbhdRepr) -> Result<BasicNbhd, TopologyError> {
        let family = match r.family {
            FamilyKind::Discrete => Family::discrete(r.carrier),
            FamilyKind::DiagTail => Family::diag_tail(r.carrier)?,
            FamilyKind::CofiniteBlock => Family::cofinite_block(r.carrier)?,
            FamilyKind::ZeroCompact => Family::zero_compact(),
            FamilyKind::PadicOmega => Family::padic_omega(r.p.unwrap_or(0))?,
            FamilyKind::PadicPlus => Family::padic_plus(r.p.unwrap_or(0))?,
            FamilyKind::PadicMinus => Family::padic_minus(r.p.unwrap_or(0))?,
        };
        BasicNbhd::new(family, r.center, r.n)
    }
}

impl BasicNbhd {
    pub fn new(family: Family, center: ExtElem, param: u64) -> Result<BasicNbhd, TopologyError> {
        if !family.admits(&center) {
            return Err(TopologyError::CenterOutsideCarrier {
                center,
                carrier: family.carrier(),
            });
        }
        Ok(BasicNbhd { family, center, param })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn center(&self) -> ExtElem {
        self.center
    }

    pub fn param(&self) -> u64 {
        self.param
    }

    /// The center as a plain element, for families whose carriers only
    /// hold plain elements.
    pub(crate) fn center_elem(&self) -> BicyclicElem {
        self.center
            .as_elem()
            .expect("non-SZero carriers hold plain elements only")
    }

    /// For the single-point basics (`Discrete` everywhere,
    /// `ZeroCompact` away from zero) the whole set.
    pub fn singleton(&self) -> Option<ExtElem> {
        match self.family.kind() {
            FamilyKind::Discrete => Some(self.center),
            FamilyKind::ZeroCompact if self.center != ExtElem::Zero => Some(self.center),
            _ => None,
        }
    }

    /// Exact membership. The point must live on the family's carrier.
    pub fn contains(&self, x: &ExtElem) -> Result<bool, TopologyError> {
        if !self.family.admits(x) {
            return Err(TopologyError::PointOutsideCarrier {
                point: *x,
                carrier: self.family.carrier(),
            });
        }
        let n = self.param;
        Ok(match self.family.kind() {
            FamilyKind::Discrete => *x == self.center,
            FamilyKind::DiagTail => {
                let c = self.center_elem();
                let e = x.as_elem().unwrap();
                *x == self.center
                    || (e.i > c.i && e.j > c.j && e.i - c.i == e.j - c.j && e.i - c.i > n)
            }
            FamilyKind::CofiniteBlock => {
                let e = x.as_elem().unwrap();
                *x == self.center || e.i > n || e.j > n
            }
            FamilyKind::ZeroCompact => match (self.center, x) {
                (ExtElem::Zero, ExtElem::Zero) => true,
                (ExtElem::Zero, ExtElem::Elem(e)) => e.j >= n,
                (center, x) => *x == center,
            },
            FamilyKind::PadicOmega => {
                let c = self.center_elem();
                let e = x.as_elem().unwrap();
                let p = self.family.prime().unwrap();
                e.j >= c.j && power_divides(p, n, e.j - c.j)
            }
            FamilyKind::PadicPlus => {
                let c = self.center_elem();
                let e = x.as_elem().unwrap();
                let p = self.family.prime().unwrap();
                e.i == c.i && e.j >= c.j && power_divides(p, n, e.j - c.j)
            }
            FamilyKind::PadicMinus => {
                let c = self.center_elem();
                let e = x.as_elem().unwrap();
                let p = self.family.prime().unwrap();
                e.j == c.j && e.i >= c.i && power_divides(p, n, e.i - c.i)
            }
        })
    }

    /// The first `count` members in the family's canonical order.
    ///
    /// Orders: progression families walk their defining parameter
    /// upward from the center; `CofiniteBlock` lists the center and
    /// then the outside of the block by increasing `max(i, j)`, ties
    /// lexicographic; `ZeroCompact` at zero lists zero and then plain
    /// elements by increasing `(j, i)`.
    pub fn enumerate(&self, count: usize) -> Vec<ExtElem> {
        let mut out: Vec<ExtElem> = Vec::with_capacity(count);
        if count == 0 {
            return out;
        }
        match self.family.kind() {
            FamilyKind::Discrete => out.push(self.center),
            FamilyKind::DiagTail => {
                let c = self.center_elem();
                out.push(self.center);
                let mut l = self.param + 1;
                while out.len() < count {
                    out.push(ExtElem::elem(c.i + l, c.j + l));
                    l += 1;
                }
            }
            FamilyKind::CofiniteBlock => {
                let c = self.center_elem();
                let n = self.param;
                let carrier = self.family.carrier();
                out.push(self.center);
                // shells by max(i, j) = d > n, lexicographic inside
                let mut d = n + 1;
                'outer: loop {
                    for i in 0..d {
                        if !push_if(&mut out, count, carrier, i, d, c) {
                            break 'outer;
                        }
                    }
                    for j in 0..=d {
                        if !push_if(&mut out, count, carrier, d, j, c) {
                            break 'outer;
                        }
                    }
                    d += 1;
                }
            }
            FamilyKind::ZeroCompact => match self.center {
                ExtElem::Zero => {
                    out.push(ExtElem::Zero);
                    let mut j = self.param;
                    'rows: loop {
                        for i in 0..=j {
                            if out.len() >= count {
                                break 'rows;
                            }
                            out.push(ExtElem::elem(i, j));
                        }
                        j += 1;
                    }
                }
                center => out.push(center),
            },
            FamilyKind::PadicOmega | FamilyKind::PadicPlus | FamilyKind::PadicMinus => {
                let c = self.center_elem();
                let p = self.family.prime().unwrap();
                match prime_power(p, self.param) {
                    None => out.push(self.center),
                    Some(step) => {
                        let mut offset: u128 = 0;
                        while out.len() < count {
                            let member = if self.family.kind() == FamilyKind::PadicMinus {
                                checked_elem(c.i as u128 + offset, c.j as u128)
                            } else {
                                checked_elem(c.i as u128, c.j as u128 + offset)
                            };
                            match member {
                                Some(e) => out.push(ExtElem::Elem(e)),
                                None => break, // past the representable range
                            }
                            offset += step;
                        }
                    }
                }
            }
        }
        out.truncate(count);
        out
    }

    /// The exponent-swap dual basic on the negative submonoid, with the
    /// same prime and parameter. Membership commutes with the swap:
    /// `x ∈ b  ⟺  dual(x) ∈ dualize(b)`.
    pub fn dualize(&self) -> Result<BasicNbhd, TopologyError> {
        if self.family.kind() != FamilyKind::PadicPlus {
            return Err(TopologyError::WrongFamily {
                expected: FamilyKind::PadicPlus,
                got: self.family.kind(),
            });
        }
        let p = self.family.prime().unwrap();
        BasicNbhd::new(Family::padic_minus(p)?, self.center.dual(), self.param)
    }
}

fn push_if(
    out: &mut Vec<ExtElem>,
    count: usize,
    carrier: Carrier,
    i: u64,
    j: u64,
    center: BicyclicElem,
) -> bool {
    if out.len() >= count {
        return false;
    }
    let e = BicyclicElem::new(i, j);
    if e == center {
        return true; // already listed first
    }
    let admitted = match carrier {
        Carrier::Full => true,
        Carrier::CPlus => i <= j,
        _ => unreachable!("cofinite blocks live on full or cplus"),
    };
    if admitted {
        out.push(ExtElem::Elem(e));
    }
    true
}

fn checked_elem(i: u128, j: u128) -> Option<BicyclicElem> {
    if i <= u64::MAX as u128 && j <= u64::MAX as u128 {
        Some(BicyclicElem::new(i as u64, j as u64))
    } else {
        None
    }
}
