//! Plain-data representations used for JSON caches and reports.
//!
//! Coefficients serialize as exact rational strings ("p/q" or "p"); a
//! cyclotomic number is its coefficient vector over the power basis of
//! zeta_M.  Deserialization needs the ambient field handle, so these are
//! explicit conversion methods rather than serde impls on the arithmetic
//! types themselves.

use crate::cyclo::{CycloField, CycloNumber, Rat};
use crate::laurent::LaurentPoly;
use crate::scalar::Scalar;
use crate::ExactError;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CycloRepr(pub Vec<String>);

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LaurentRepr {
    pub low: i64,
    pub coeffs: Vec<CycloRepr>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ScalarRepr {
    pub num: LaurentRepr,
    pub den: LaurentRepr,
}

fn parse_rat(s: &str) -> Result<Rat, ExactError> {
    Rat::from_str(s).map_err(|e| ExactError::BadSerialization(format!("bad rational {s:?}: {e}")))
}

impl CycloNumber {
    pub fn to_repr(&self) -> CycloRepr {
        CycloRepr(self.coeffs().iter().map(|c| c.to_string()).collect())
    }

    pub fn from_repr(field: &CycloField, repr: &CycloRepr) -> Result<CycloNumber, ExactError> {
        let coeffs = repr
            .0
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CycloNumber::from_coeffs(field, coeffs))
    }
}

impl LaurentPoly {
    pub fn to_repr(&self) -> LaurentRepr {
        let coeffs = (self.low()..=self.high())
            .map(|k| self.coeff(k).to_repr())
            .collect();
        if self.is_zero() {
            LaurentRepr {
                low: 0,
                coeffs: Vec::new(),
            }
        } else {
            LaurentRepr {
                low: self.low(),
                coeffs,
            }
        }
    }

    pub fn from_repr(field: &CycloField, repr: &LaurentRepr) -> Result<LaurentPoly, ExactError> {
        let mut terms = Vec::with_capacity(repr.coeffs.len());
        for (i, c) in repr.coeffs.iter().enumerate() {
            terms.push((repr.low + i as i64, CycloNumber::from_repr(field, c)?));
        }
        Ok(LaurentPoly::from_terms(field, &terms))
    }
}

impl Scalar {
    pub fn to_repr(&self) -> ScalarRepr {
        ScalarRepr {
            num: self.num().to_repr(),
            den: self.den().to_repr(),
        }
    }

    pub fn from_repr(field: &CycloField, repr: &ScalarRepr) -> Result<Scalar, ExactError> {
        let num = LaurentPoly::from_repr(field, &repr.num)?;
        let den = LaurentPoly::from_repr(field, &repr.den)?;
        if den.is_zero() {
            return Err(ExactError::BadSerialization(
                "zero denominator in serialized scalar".into(),
            ));
        }
        Ok(Scalar::from_ratio(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_round_trip() {
        let f = CycloField::new(12);
        let q = Scalar::q(&f);
        let z = Scalar::from_cyclo(f.zeta());
        let s = q
            .pow(3)
            .sub(&z.mul(&q.pow(-2)))
            .div(&q.pow(2).add(&Scalar::from_rat(&f, crate::cyclo::rat_frac(1, 3))))
            .unwrap();
        let json = serde_json::to_string(&s.to_repr()).unwrap();
        let back: ScalarRepr = serde_json::from_str(&json).unwrap();
        assert_eq!(Scalar::from_repr(&f, &back).unwrap(), s);
    }
}
