//! Shift maps: multiplication by a fixed element on one side.

use std::fmt;

use serde::{Deserialize, Serialize};

use bicyclic_core::{mul, mul_closed, mul_s, Carrier, ExtElem};
use bicyclic_topologies::Family;

use crate::error::ContinuityError;

/// Which side the fixed element multiplies on. `Left` is the map
/// `x ↦ s·x`, `Right` is `x ↦ x·s`. A topology in which every left
/// shift is continuous is right-topological, and vice versa.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flipped(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// A continuity question: is the `side` shift by `s` continuous at
/// `point` in the topology generated by `family`?
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftSpec {
    pub side: Side,
    pub s: ExtElem,
    pub family: Family,
    pub point: ExtElem,
}

impl ShiftSpec {
    pub fn new(
        side: Side,
        s: ExtElem,
        family: Family,
        point: ExtElem,
    ) -> Result<ShiftSpec, ContinuityError> {
        for (role, value) in [("shifting element", &s), ("point", &point)] {
            if !family.admits(value) {
                return Err(ContinuityError::InvalidSpec(format!(
                    "{role} {value} is outside carrier {}",
                    family.carrier()
                )));
            }
        }
        Ok(ShiftSpec { side, s, family, point })
    }

    /// Apply the shift to a carrier element.
    pub fn apply(&self, x: &ExtElem) -> Result<ExtElem, ContinuityError> {
        let (lhs, rhs) = match self.side {
            Side::Left => (self.s, *x),
            Side::Right => (*x, self.s),
        };
        Ok(match self.family.carrier() {
            Carrier::SZero => mul_s(lhs, rhs)?,
            Carrier::Full | Carrier::Omega => {
                let (a, b) = (plain(&lhs)?, plain(&rhs)?);
                ExtElem::Elem(mul(a, b))
            }
            c @ (Carrier::CPlus | Carrier::CMinus) => {
                let (a, b) = (plain(&lhs)?, plain(&rhs)?);
                ExtElem::Elem(mul_closed(a, b, c)?)
            }
        })
    }
}

fn plain(x: &ExtElem) -> Result<bicyclic_core::BicyclicElem, ContinuityError> {
    x.as_elem()
        .ok_or_else(|| ContinuityError::InvalidSpec("zero outside the zero-adjoined carrier".into()))
}

impl fmt::Display for ShiftSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} shift by {} at {} in {}",
            self.side, self.s, self.point, self.family
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bicyclic_topologies::Family;

    #[test]
    fn apply_respects_sides() {
        let fam = Family::padic_plus(2).unwrap();
        let spec = ShiftSpec::new(
            Side::Left,
            ExtElem::elem(0, 1),
            fam,
            ExtElem::elem(2, 2),
        )
        .unwrap();
        assert_eq!(spec.apply(&ExtElem::elem(2, 2)).unwrap(), ExtElem::elem(1, 2));

        let spec = ShiftSpec::new(
            Side::Right,
            ExtElem::elem(1, 1),
            fam,
            ExtElem::elem(0, 0),
        )
        .unwrap();
        assert_eq!(spec.apply(&ExtElem::elem(0, 4)).unwrap(), ExtElem::elem(0, 4));
    }

    #[test]
    fn specs_validate_their_carrier() {
        let fam = Family::padic_plus(2).unwrap();
        assert!(ShiftSpec::new(Side::Left, ExtElem::elem(3, 1), fam, ExtElem::elem(0, 0)).is_err());
        assert!(ShiftSpec::new(Side::Left, ExtElem::Zero, fam, ExtElem::elem(0, 0)).is_err());
        let zc = Family::zero_compact();
        assert!(ShiftSpec::new(Side::Right, ExtElem::Zero, zc, ExtElem::elem(1, 2)).is_ok());
    }
}
