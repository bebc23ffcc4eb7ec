//! The integrability condition `φ ∧ φ = 0`: on a chart, `[φ_z, φ_w] = 0`.

use crate::algebra::{Mat, Poly};
use crate::geometry::Chart;

use super::{CoHiggsError, CoHiggsField};

/// The commutator `[φ_z, φ_w]` on `chart`.
pub fn integrability_obstruction(field: &CoHiggsField, chart: Chart) -> Result<Mat<Poly>, CoHiggsError> {
    let l = field.local(chart)?;
    Ok(l.phi_z.commutator(&l.phi_w)?)
}

pub fn integrable(field: &CoHiggsField, chart: Chart) -> Result<bool, CoHiggsError> {
    Ok(integrability_obstruction(field, chart)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Scalar;
    use crate::cohiggs::CoHiggsK1;
    use crate::geometry::TangentSection;

    #[test]
    fn diagonal_fields_commute() {
        let a = TangentSection::from_ints([[1, 2, 0], [0, -3, 5], [4, 1, 2]]);
        let f = CoHiggsField::K1(CoHiggsK1::new(a, TangentSection::zero(), TangentSection::zero()));
        for ch in Chart::ALL {
            assert!(integrable(&f, ch).unwrap());
        }
    }

    #[test]
    fn chart0_example_fails() {
        // chart-0 components φ_z = [[1,0],[0,-1]], φ_w = [[0,1],[0,0]]:
        // A has local rep (1, 0), B has (0, 1), C = 0
        let a = TangentSection::from_local(Chart::new(0), &[Poly::one(), Poly::zero()]).unwrap();
        let b = TangentSection::from_local(Chart::new(0), &[Poly::zero(), Poly::one()]).unwrap();
        let f = CoHiggsField::K1(CoHiggsK1::new(a, b, TangentSection::zero()));
        let obs = integrability_obstruction(&f, Chart::new(0)).unwrap();
        let two = Poly::constant(Scalar::int(2));
        assert_eq!(obs, Mat::from_rows(vec![vec![Poly::zero(), two], vec![Poly::zero(), Poly::zero()]]));
        assert!(!integrable(&f, Chart::new(1)).unwrap());
    }
}
