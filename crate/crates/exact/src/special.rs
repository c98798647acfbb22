//! Specializations of the deformation parameter q: either generic (q stays
//! an indeterminate) or q sent to a primitive m-th root of unity inside the
//! ambient cyclotomic field.

use crate::cyclo::{CycloField, CycloNumber};
use crate::scalar::Scalar;
use crate::ExactError;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Specialization {
    Generic,
    /// q -> zeta_M^(M/m), a primitive m-th root of unity; m must divide the
    /// ambient order M.
    Root(u64),
}

impl Specialization {
    pub fn is_generic(&self) -> bool {
        matches!(self, Specialization::Generic)
    }

    /// The image of q, or `None` under the generic specialization.
    pub fn q_value(&self, field: &CycloField) -> Result<Option<CycloNumber>, ExactError> {
        match self {
            Specialization::Generic => Ok(None),
            Specialization::Root(m) => {
                if *m == 0 || field.order() % m != 0 {
                    return Err(ExactError::IncompatibleOrder {
                        sub: *m,
                        amb: field.order(),
                    });
                }
                Ok(Some(field.root_of_unity(*m)))
            }
        }
    }

    /// Applies the specialization to a scalar; the result is a constant
    /// scalar at a root of unity and the input itself generically.
    pub fn apply(&self, s: &Scalar) -> Result<Scalar, ExactError> {
        match self.q_value(s.field())? {
            None => Ok(s.clone()),
            Some(point) => Ok(Scalar::from_cyclo(s.eval(&point)?)),
        }
    }

    /// The quantum characteristic: the least e >= 1 with
    /// 1 + q^2 + ... + q^(2(e-1)) = 0, or `None` when no such e exists.
    pub fn quantum_e(&self, field: &CycloField) -> Result<Option<u64>, ExactError> {
        let q = match self.q_value(field)? {
            None => return Ok(None),
            Some(q) => q,
        };
        let z = q.mul(&q);
        let mut sum = field.zero();
        let mut zpow = field.one();
        for e in 1..=field.order() {
            sum = sum.add(&zpow);
            if sum.is_zero() {
                return Ok(Some(e));
            }
            zpow = zpow.mul(&z);
        }
        Ok(None)
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Specialization::Generic => write!(f, "generic"),
            Specialization::Root(m) => write!(f, "root-of-unity({})", m),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fourth_root_has_quantum_characteristic_two() {
        let f = CycloField::new(4);
        let s = Specialization::Root(4);
        assert_eq!(s.quantum_e(&f).unwrap(), Some(2));
    }

    #[test]
    fn generic_and_degenerate_cases_have_no_e() {
        let f = CycloField::new(4);
        assert_eq!(Specialization::Generic.quantum_e(&f).unwrap(), None);
        // q = -1 gives q^2 = 1, so the partial sums never vanish.
        assert_eq!(Specialization::Root(2).quantum_e(&f).unwrap(), None);
        assert_eq!(Specialization::Root(1).quantum_e(&f).unwrap(), None);
    }

    #[test]
    fn cube_root_has_quantum_characteristic_three() {
        let f = CycloField::new(12);
        assert_eq!(Specialization::Root(3).quantum_e(&f).unwrap(), Some(3));
        assert_eq!(Specialization::Root(6).quantum_e(&f).unwrap(), Some(3));
        assert_eq!(Specialization::Root(12).quantum_e(&f).unwrap(), Some(6));
    }

    #[test]
    fn incompatible_order_is_rejected() {
        let f = CycloField::new(4);
        assert!(matches!(
            Specialization::Root(3).q_value(&f),
            Err(ExactError::IncompatibleOrder { sub: 3, amb: 4 })
        ));
    }

    #[test]
    fn apply_at_root_yields_constant() {
        let f = CycloField::new(4);
        let q = Scalar::q(&f);
        let s = Specialization::Root(4).apply(&q.pow(2)).unwrap();
        assert_eq!(s, Scalar::from_int(&f, -1));
    }
}
