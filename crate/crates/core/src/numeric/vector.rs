use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::{check_dim, Error, Result};

/// A point of Qⁿ, n ≥ 1. Equality is exact coordinatewise equality; `Ord` is
/// lexicographic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QVector(Vec<Rational>);

impl QVector {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidInput("vector must have at least one coordinate".into()));
        }
        Ok(QVector(coords))
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "dimension must be positive");
        QVector(vec![Rational::zero(); dim])
    }

    /// `value` times the unit vector along `axis`.
    pub fn axis(dim: usize, axis: usize, value: Rational) -> Self {
        let mut v = Self::zeros(dim);
        v.0[axis] = value;
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        QVector::new(coords.iter().map(|&c| Rational::from(c)).collect()).expect("nonempty")
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    fn zip_with(&self, other: &QVector, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        Ok(QVector(self.0.iter().zip(&other.0).map(|(a, b)| f(a, b)).collect()))
    }

    pub fn add(&self, other: &QVector) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &QVector) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Self {
        QVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn dot(&self, other: &QVector) -> Result<Rational> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum())
    }

    /// Componentwise `self <= other`.
    pub fn cwise_le(&self, other: &QVector) -> Result<bool> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a <= b))
    }
}

impl Index<usize> for QVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for QVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coords = Vec::<Rational>::deserialize(deserializer)?;
        QVector::new(coords).map_err(serde::de::Error::custom)
    }
}

/// `p·x + (1−p)·y` for `p ∈ [0, 1]`.
pub fn convex_combine(x: &QVector, y: &QVector, p: &Rational) -> Result<QVector> {
    if !p.is_unit_interval() {
        return Err(Error::Domain(format!("weight {p} outside [0, 1]")));
    }
    vector_linear(p, x, &p.complement(), y)
}

/// `a·x + b·y`.
pub fn vector_linear(a: &Rational, x: &QVector, b: &Rational, y: &QVector) -> Result<QVector> {
    x.zip_with(y, |xi, yi| a * xi + b * yi)
}

pub fn vector_cwise_sup(x: &QVector, y: &QVector) -> Result<QVector> {
    x.zip_with(y, |a, b| if a >= b { a.clone() } else { b.clone() })
}

pub fn vector_cwise_inf(x: &QVector, y: &QVector) -> Result<QVector> {
    x.zip_with(y, |a, b| if a <= b { a.clone() } else { b.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q;
    use proptest::prelude::*;

    fn v(c: &[i64]) -> QVector {
        QVector::from_ints(c)
    }

    #[test]
    fn convex_combine_examples() {
        let m = convex_combine(&v(&[0, 0]), &v(&[2, 4]), &q(1, 2)).unwrap();
        assert_eq!(m, v(&[1, 2]));
        let x = v(&[3, -1]);
        let y = v(&[7, 5]);
        assert_eq!(convex_combine(&x, &y, &q(1, 1)).unwrap(), x);
        assert_eq!(convex_combine(&x, &y, &q(0, 1)).unwrap(), y);
    }

    #[test]
    fn convex_combine_errors() {
        assert!(matches!(
            convex_combine(&v(&[0, 0]), &v(&[1]), &q(1, 2)),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(convex_combine(&v(&[0]), &v(&[1]), &q(3, 2)), Err(Error::Domain(_))));
        assert!(matches!(convex_combine(&v(&[0]), &v(&[1]), &q(-1, 2)), Err(Error::Domain(_))));
    }

    #[test]
    fn linear_examples() {
        let one = q(1, 1);
        let r = vector_linear(&q(2, 1), &v(&[1, 0]), &q(3, 1), &v(&[0, 1])).unwrap();
        assert_eq!(r, v(&[2, 3]));
        let x = v(&[5, 6]);
        assert_eq!(vector_linear(&one, &x, &q(0, 1), &v(&[9, 9])).unwrap(), x);
        let r = vector_linear(&q(-1, 1), &v(&[1, 2]), &q(0, 1), &v(&[0, 0])).unwrap();
        assert_eq!(r, v(&[-1, -2]));
        assert!(vector_linear(&one, &v(&[1]), &one, &v(&[1, 2])).is_err());
    }

    #[test]
    fn sup_examples() {
        assert_eq!(vector_cwise_sup(&v(&[1, 3]), &v(&[2, 1])).unwrap(), v(&[2, 3]));
        let x = v(&[4, -2]);
        assert_eq!(vector_cwise_sup(&x, &x).unwrap(), x);
        assert_eq!(vector_cwise_sup(&v(&[0, 0]), &v(&[-1, -1])).unwrap(), v(&[0, 0]));
        assert!(vector_cwise_sup(&v(&[0]), &v(&[0, 0])).is_err());
    }

    #[test]
    fn empty_vector_rejected() {
        assert!(QVector::new(vec![]).is_err());
        assert!(serde_json::from_str::<QVector>("[]").is_err());
    }

    fn arb_rat() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..16).prop_map(|(n, d)| q(n, d))
    }

    fn arb_vec(dim: usize) -> impl Strategy<Value = QVector> {
        prop::collection::vec(arb_rat(), dim).prop_map(|c| QVector::new(c).unwrap())
    }

    proptest! {
        #[test]
        fn parametric_commutativity(x in arb_vec(3), y in arb_vec(3), n in 0i64..=16) {
            let p = q(n, 16);
            prop_assert_eq!(
                convex_combine(&x, &y, &p).unwrap(),
                convex_combine(&y, &x, &p.complement()).unwrap()
            );
        }

        #[test]
        fn sup_is_a_semilattice(x in arb_vec(2), y in arb_vec(2), z in arb_vec(2)) {
            let s = |a: &QVector, b: &QVector| vector_cwise_sup(a, b).unwrap();
            prop_assert_eq!(s(&x, &x), x.clone());
            prop_assert_eq!(s(&x, &y), s(&y, &x));
            prop_assert_eq!(s(&s(&x, &y), &z), s(&x, &s(&y, &z)));
        }

        #[test]
        fn json_round_trip(x in arb_vec(4)) {
            let text = serde_json::to_string(&x).unwrap();
            prop_assert_eq!(serde_json::from_str::<QVector>(&text).unwrap(), x);
        }
    }
}
