use std::fmt;

use super::{check_composable, increasing_sequences, Category, IndexError, Morphism};

/// An order-preserving map `[m] -> [n]`, stored by its values on `0..=m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneMap {
    target: usize,
    values: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(target: usize, values: Vec<usize>) -> Result<Self, IndexError> {
        if values.is_empty() {
            return Err(IndexError::InvalidMorphism(
                "a map out of [m] needs m+1 values".into(),
            ));
        }
        if let Some(v) = values.iter().find(|&&v| v > target) {
            return Err(IndexError::InvalidMorphism(format!(
                "value {v} outside [0, {target}]"
            )));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(IndexError::InvalidMorphism(format!(
                "values {values:?} are not weakly increasing"
            )));
        }
        Ok(Self { target, values })
    }

    pub(crate) fn new_unchecked(target: usize, values: Vec<usize>) -> Self {
        debug_assert!(Self::new(target, values.clone()).is_ok());
        Self { target, values }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    /// The coface `[n-1] -> [n]` skipping `i`.
    pub fn face(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n, "face {i} of [{n}] does not exist");
        Self::new_unchecked(n, (0..n).map(|v| if v < i { v } else { v + 1 }).collect())
    }

    /// The codegeneracy `[n+1] -> [n]` hitting `i` twice.
    pub fn degeneracy(n: usize, i: usize) -> Self {
        assert!(i <= n, "degeneracy {i} of [{n}] does not exist");
        Self::new_unchecked(n, (0..=n + 1).map(|v| if v <= i { v } else { v - 1 }).collect())
    }

    /// The edge `[1] -> [n]` with `0 ↦ k`, `1 ↦ k+1`.
    pub fn alpha(n: usize, k: usize) -> Self {
        assert!(k < n);
        Self::new_unchecked(n, vec![k, k + 1])
    }

    /// The edge `[1] -> [n]` with `0 ↦ 0`, `1 ↦ k+1`.
    pub fn gamma(n: usize, k: usize) -> Self {
        assert!(k < n);
        Self::new_unchecked(n, vec![0, k + 1])
    }

    /// The vertex `[0] -> [n]` picking `i`.
    pub fn vertex(n: usize, i: usize) -> Self {
        assert!(i <= n);
        Self::new_unchecked(n, vec![i])
    }

    pub fn constant(source: usize, target: usize, value: usize) -> Self {
        assert!(value <= target);
        Self::new_unchecked(target, vec![value; source + 1])
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0
            && *self.values.last().unwrap() == self.target
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }
}

impl Morphism for MonotoneMap {
    const CATEGORY: Category = Category::Delta;

    fn source(&self) -> usize {
        self.values.len() - 1
    }

    fn target(&self) -> usize {
        self.target
    }

    fn identity(rank: usize) -> Self {
        Self::new_unchecked(rank, (0..=rank).collect())
    }

    fn compose(&self, inner: &Self) -> Result<Self, IndexError> {
        check_composable(inner.target, self.source())?;
        Ok(Self::new_unchecked(
            self.target,
            inner.values.iter().map(|&v| self.values[v]).collect(),
        ))
    }

    fn hom(source: usize, target: usize) -> Vec<Self> {
        increasing_sequences(source + 1, target)
            .into_iter()
            .map(|values| Self::new_unchecked(target, values))
            .collect()
    }
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D[{}->{}]:", self.source(), self.target)?;
        super::text::write_list(f, &self.values)
    }
}
