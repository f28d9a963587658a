//! Closed-form moduli and expected-usage values for the standard graphs,
//! kept as exact rationals and used as ground truth by the verification
//! suites. All modulus entries are for p = 2 with unit weights.

use num_rational::Rational64;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::StandardKind;

/// Which family of objects a value refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ObjectFamily {
    Star,
    EdgeCover,
    FractionalEdgeCover,
}

impl ObjectFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            ObjectFamily::Star => "star",
            ObjectFamily::EdgeCover => "ec",
            ObjectFamily::FractionalEdgeCover => "fec",
        }
    }
}

impl std::str::FromStr for ObjectFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "star" | "stars" => Ok(ObjectFamily::Star),
            "ec" | "edge-covers" => Ok(ObjectFamily::EdgeCover),
            "fec" | "fractional-edge-covers" => Ok(ObjectFamily::FractionalEdgeCover),
            other => Err(Error::Domain(format!("unknown object family: {other}"))),
        }
    }
}

fn ratio(num: i64, den: i64) -> Rational64 {
    Rational64::new(num, den)
}

/// Exact 2-modulus of the named family on an unweighted standard graph.
/// Supported: star, cycle, and complete graphs for all three families;
/// path and wheel graphs for the star family.
pub fn closed_form_modulus(
    kind: StandardKind,
    n: usize,
    family: ObjectFamily,
) -> Result<Rational64> {
    let unsupported = || {
        Error::Domain(format!(
            "no closed form for {} on {}:{n}",
            family.as_str(),
            kind.as_str()
        ))
    };
    let ni = n as i64;
    let check = |min: usize| -> Result<()> {
        if n < min {
            Err(Error::Domain(format!("{} requires n >= {min}", kind.as_str())))
        } else {
            Ok(())
        }
    };
    match (kind, family) {
        (StandardKind::Star, ObjectFamily::Star) => {
            check(3)?;
            Ok(Rational64::from_integer(ni - 1))
        }
        (StandardKind::Star, ObjectFamily::EdgeCover)
        | (StandardKind::Star, ObjectFamily::FractionalEdgeCover) => {
            check(3)?;
            Ok(ratio(1, ni - 1))
        }
        (StandardKind::Cycle, ObjectFamily::Star) => {
            check(3)?;
            Ok(ratio(ni, 4))
        }
        (StandardKind::Cycle, ObjectFamily::EdgeCover) => {
            check(3)?;
            if n % 2 == 0 {
                Ok(ratio(4, ni))
            } else {
                Ok(ratio(4 * ni, (ni + 1) * (ni + 1)))
            }
        }
        (StandardKind::Cycle, ObjectFamily::FractionalEdgeCover) => {
            check(3)?;
            Ok(ratio(4, ni))
        }
        (StandardKind::Complete, ObjectFamily::Star) => {
            check(2)?;
            Ok(ratio(ni, 2 * (ni - 1)))
        }
        (StandardKind::Complete, ObjectFamily::EdgeCover) => {
            check(2)?;
            if n % 2 == 0 {
                Ok(ratio(2 * (ni - 1), ni))
            } else {
                Ok(ratio(2 * ni * (ni - 1), (ni + 1) * (ni + 1)))
            }
        }
        (StandardKind::Complete, ObjectFamily::FractionalEdgeCover) => {
            check(2)?;
            Ok(ratio(2 * (ni - 1), ni))
        }
        (StandardKind::Path, ObjectFamily::Star) => {
            check(3)?;
            if n <= 4 {
                Ok(Rational64::from_integer(2))
            } else if n % 2 == 1 {
                Ok(ratio(ni + 5, 4))
            } else {
                Ok(ratio(ni * ni + 2 * ni - 16, 2 * (2 * ni - 6)))
            }
        }
        (StandardKind::Wheel, ObjectFamily::Star) => {
            check(4)?;
            if n <= 5 {
                Ok(ratio(4 + (ni - 2) * (ni - 2), 4 * (ni - 1)))
            } else {
                Ok(ratio(ni - 1, 5))
            }
        }
        _ => Err(unsupported()),
    }
}

/// Expected optimal usage of the bridge edge of the n-barbell under the
/// named family's optimal pmf (p = 2, unit weights). The n = 3 barbell is a
/// special case without a published value and is excluded.
pub fn barbell_bridge_usage(n: usize, family: ObjectFamily) -> Result<Rational64> {
    if n < 4 {
        return Err(Error::Domain(
            "bridge usage formulas hold for n >= 4 (n = 3 is a special case)".into(),
        ));
    }
    let ni = n as i64;
    match family {
        ObjectFamily::FractionalEdgeCover => Ok(ratio(2 * ni + 2, ni * ni - ni + 4)),
        ObjectFamily::EdgeCover => {
            if n % 2 == 0 {
                Ok(Rational64::from_integer(0))
            } else {
                Ok(ratio(ni - 2, ni * ni - ni - 1))
            }
        }
        ObjectFamily::Star => Err(Error::Domain("bridge usage is tabulated for ec and fec".into())),
    }
}

/// Ratio of the edge-cover modulus to the fractional-edge-cover modulus on
/// the complete graph: 1 for even n, n^2/(n+1)^2 for odd n.
pub fn ec_fec_ratio_complete(n: usize) -> Result<Rational64> {
    if n < 3 {
        return Err(Error::Domain("ratio tabulated for n >= 3".into()));
    }
    let ni = n as i64;
    if n % 2 == 0 {
        Ok(Rational64::from_integer(1))
    } else {
        Ok(ratio(ni * ni, (ni + 1) * (ni + 1)))
    }
}

/// One ground-truth value.
#[derive(Debug, Clone)]
pub struct OracleEntry {
    pub kind: StandardKind,
    pub n: usize,
    pub family: ObjectFamily,
    pub p: u32,
    pub value: Rational64,
}

impl OracleEntry {
    pub fn value_f64(&self) -> f64 {
        self.value.to_f64().expect("oracle rational fits in f64")
    }
}

/// The full closed-form table for sizes up to `n_max`.
pub fn oracle_table(n_max: usize) -> Vec<OracleEntry> {
    let mut out = Vec::new();
    let families = [
        ObjectFamily::Star,
        ObjectFamily::EdgeCover,
        ObjectFamily::FractionalEdgeCover,
    ];
    for kind in [
        StandardKind::Star,
        StandardKind::Cycle,
        StandardKind::Complete,
        StandardKind::Path,
        StandardKind::Wheel,
    ] {
        for n in 2..=n_max {
            for family in families {
                if let Ok(value) = closed_form_modulus(kind, n, family) {
                    out.push(OracleEntry { kind, n, family, p: 2, value });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_values() {
        assert_eq!(
            closed_form_modulus(StandardKind::Complete, 5, ObjectFamily::EdgeCover).unwrap(),
            ratio(10, 9)
        );
        assert_eq!(
            closed_form_modulus(StandardKind::Path, 8, ObjectFamily::Star).unwrap(),
            ratio(16, 5)
        );
        assert_eq!(
            closed_form_modulus(StandardKind::Wheel, 5, ObjectFamily::Star).unwrap(),
            ratio(13, 16)
        );
        assert_eq!(
            closed_form_modulus(StandardKind::Star, 6, ObjectFamily::Star).unwrap(),
            Rational64::from_integer(5)
        );
        assert_eq!(
            closed_form_modulus(StandardKind::Cycle, 7, ObjectFamily::EdgeCover).unwrap(),
            ratio(28, 64)
        );
    }

    #[test]
    fn unsupported_combinations_error() {
        assert!(closed_form_modulus(StandardKind::Path, 8, ObjectFamily::EdgeCover).is_err());
        assert!(closed_form_modulus(StandardKind::Wheel, 8, ObjectFamily::FractionalEdgeCover)
            .is_err());
        assert!(closed_form_modulus(StandardKind::Barbell, 8, ObjectFamily::Star).is_err());
        assert!(closed_form_modulus(StandardKind::Wheel, 3, ObjectFamily::Star).is_err());
    }

    #[test]
    fn bridge_usage_values() {
        assert_eq!(
            barbell_bridge_usage(7, ObjectFamily::FractionalEdgeCover).unwrap(),
            ratio(16, 46)
        );
        assert_eq!(
            barbell_bridge_usage(8, ObjectFamily::EdgeCover).unwrap(),
            Rational64::from_integer(0)
        );
        assert_eq!(barbell_bridge_usage(7, ObjectFamily::EdgeCover).unwrap(), ratio(5, 41));
        assert!(barbell_bridge_usage(3, ObjectFamily::EdgeCover).is_err());
    }

    #[test]
    fn complete_ratio_values() {
        assert_eq!(ec_fec_ratio_complete(6).unwrap(), Rational64::from_integer(1));
        assert_eq!(ec_fec_ratio_complete(5).unwrap(), ratio(25, 36));
        for n in 3..=40 {
            let r = ec_fec_ratio_complete(n).unwrap();
            assert!(r >= ratio(9, 16) && r <= Rational64::from_integer(1));
        }
    }

    #[test]
    fn oracle_values_respect_generic_bounds() {
        // Edge-cover values obey the ceil(n/2) energy bound; star values lie
        // in the degree sandwich; fec values are within (4/3)^2 of ec.
        for entry in oracle_table(12) {
            let n = entry.n as i64;
            let m: i64 = match entry.kind {
                StandardKind::Star => n - 1,
                StandardKind::Cycle => n,
                StandardKind::Complete => n * (n - 1) / 2,
                StandardKind::Path => n - 1,
                StandardKind::Wheel => 2 * (n - 1),
                StandardKind::Barbell => unreachable!(),
            };
            let min_degree: i64 = match entry.kind {
                StandardKind::Star | StandardKind::Path => 1,
                StandardKind::Cycle => 2,
                StandardKind::Complete => n - 1,
                StandardKind::Wheel => 3,
                StandardKind::Barbell => unreachable!(),
            };
            match entry.family {
                ObjectFamily::EdgeCover => {
                    let half = Rational64::from_integer((entry.n as i64 + 1) / 2);
                    let bound = Rational64::from_integer(m) / (half * half);
                    assert!(entry.value <= bound, "{entry:?}");
                }
                ObjectFamily::Star => {
                    let d2 = Rational64::from_integer(min_degree * min_degree);
                    let lower = Rational64::new(1, 1) / d2;
                    let upper = Rational64::from_integer(m) / d2;
                    assert!(entry.value >= lower && entry.value <= upper, "{entry:?}");
                }
                ObjectFamily::FractionalEdgeCover => {
                    let ec = closed_form_modulus(entry.kind, entry.n, ObjectFamily::EdgeCover);
                    if let Ok(ec) = ec {
                        let upper = ec * ratio(16, 9);
                        assert!(entry.value >= ec && entry.value <= upper, "{entry:?}");
                    }
                }
            }
        }
    }
}
