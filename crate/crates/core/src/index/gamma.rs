//! Segal's category Γ and its pointed-map description.
//!
//! A [`GammaMorphism`] `m -> n` assigns to each `i` in `{1..m}` a subset of
//! `{1..n}`, pairwise disjoint. A [`PointedMap`] `n -> m` is a function
//! `{0..n} -> {0..m}` fixing `0`. The dictionary between them is
//! contravariant: `j ↦ i` exactly when `j ∈ θ(i)`, everything else to `0`.

use std::collections::BTreeSet;
use std::fmt;

use super::{check_composable, Category, IndexError, MonotoneMap, Morphism};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GammaMorphism {
    target: usize,
    images: Vec<BTreeSet<usize>>,
}

impl GammaMorphism {
    pub fn new(target: usize, images: Vec<BTreeSet<usize>>) -> Result<Self, IndexError> {
        let mut seen = BTreeSet::new();
        for (i, img) in images.iter().enumerate() {
            for &j in img {
                if j == 0 || j > target {
                    return Err(IndexError::InvalidMorphism(format!(
                        "image of {} contains {j}, outside {{1..{target}}}",
                        i + 1
                    )));
                }
                if !seen.insert(j) {
                    return Err(IndexError::InvalidMorphism(format!(
                        "images are not disjoint: {j} is hit twice"
                    )));
                }
            }
        }
        Ok(Self { target, images })
    }

    /// Image of `i`, for `i` in `1..=source`.
    pub fn image(&self, i: usize) -> &BTreeSet<usize> {
        &self.images[i - 1]
    }

    pub fn images(&self) -> &[BTreeSet<usize>] {
        &self.images
    }

    /// The morphism `1 -> n` with image `{1, …, k+1}`.
    pub fn j(n: usize, k: usize) -> Self {
        assert!(k < n);
        Self {
            target: n,
            images: vec![(1..=k + 1).collect()],
        }
    }

    /// The pointed map `target -> source` under the dictionary.
    pub fn to_pointed(&self) -> PointedMap {
        let mut values = vec![0; self.target + 1];
        for (i, img) in self.images.iter().enumerate() {
            for &j in img {
                values[j] = i + 1;
            }
        }
        PointedMap {
            target: self.images.len(),
            values,
        }
    }
}

impl Morphism for GammaMorphism {
    const CATEGORY: Category = Category::Gamma;

    fn source(&self) -> usize {
        self.images.len()
    }

    fn target(&self) -> usize {
        self.target
    }

    fn identity(rank: usize) -> Self {
        Self {
            target: rank,
            images: (1..=rank).map(|i| BTreeSet::from([i])).collect(),
        }
    }

    /// `(self ∘ inner)(i)` is the union of `self(j)` over `j ∈ inner(i)`.
    fn compose(&self, inner: &Self) -> Result<Self, IndexError> {
        check_composable(inner.target, self.source())?;
        let images = inner
            .images
            .iter()
            .map(|img| {
                img.iter()
                    .flat_map(|&j| self.image(j).iter().copied())
                    .collect()
            })
            .collect();
        Ok(Self {
            target: self.target,
            images,
        })
    }

    fn hom(source: usize, target: usize) -> Vec<Self> {
        // each target element picks an owner in 1..=source, or 0 for none
        PointedMap::hom(target, source)
            .into_iter()
            .map(|p| p.to_gamma())
            .collect()
    }
}

impl fmt::Display for GammaMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G[{}->{}]:", self.source(), self.target)?;
        for img in &self.images {
            f.write_str("{")?;
            super::text::write_list(f, &img.iter().copied().collect::<Vec<_>>())?;
            f.write_str("}")?;
        }
        Ok(())
    }
}

/// A basepoint-preserving map `{0..m} -> {0..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointedMap {
    target: usize,
    values: Vec<usize>,
}

impl PointedMap {
    pub fn new(target: usize, values: Vec<usize>) -> Result<Self, IndexError> {
        match values.first() {
            None => {
                return Err(IndexError::InvalidMorphism(
                    "a pointed map needs at least the basepoint".into(),
                ))
            }
            Some(&v) if v != 0 => {
                return Err(IndexError::InvalidMorphism(
                    "the basepoint must map to 0".into(),
                ))
            }
            _ => {}
        }
        if let Some(v) = values.iter().find(|&&v| v > target) {
            return Err(IndexError::InvalidMorphism(format!(
                "value {v} outside {{0..{target}}}"
            )));
        }
        Ok(Self { target, values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    /// `p_{n,i}: n -> 1`, sending `i` to `1` and everything else to `0`.
    pub fn projection(n: usize, i: usize) -> Self {
        assert!(1 <= i && i <= n);
        Self {
            target: 1,
            values: (0..=n).map(|k| usize::from(k == i)).collect(),
        }
    }

    /// `n -> 1` sending every non-basepoint to `1`.
    pub fn fold(n: usize) -> Self {
        Self {
            target: 1,
            values: (0..=n).map(|k| usize::from(k > 0)).collect(),
        }
    }

    /// The transposition of `i` and `j` on `{0..n}`.
    pub fn swap(n: usize, i: usize, j: usize) -> Self {
        let mut values: Vec<usize> = (0..=n).collect();
        values.swap(i, j);
        Self { target: n, values }
    }

    /// The dictionary inverse: the Γ-morphism `target -> source`.
    pub fn to_gamma(&self) -> GammaMorphism {
        let mut images = vec![BTreeSet::new(); self.target];
        for (j, &i) in self.values.iter().enumerate().skip(1) {
            if i > 0 {
                images[i - 1].insert(j);
            }
        }
        GammaMorphism {
            target: self.values.len() - 1,
            images,
        }
    }
}

impl Morphism for PointedMap {
    const CATEGORY: Category = Category::GammaOp;

    fn source(&self) -> usize {
        self.values.len() - 1
    }

    fn target(&self) -> usize {
        self.target
    }

    fn identity(rank: usize) -> Self {
        Self {
            target: rank,
            values: (0..=rank).collect(),
        }
    }

    fn compose(&self, inner: &Self) -> Result<Self, IndexError> {
        check_composable(inner.target, self.source())?;
        Ok(Self {
            target: self.target,
            values: inner.values.iter().map(|&v| self.values[v]).collect(),
        })
    }

    fn hom(source: usize, target: usize) -> Vec<Self> {
        let count = (target + 1).pow(source as u32);
        (0..count)
            .map(|mut code| {
                let mut values = vec![0; source + 1];
                // most significant digit first, so the list is lexicographic
                for slot in values[1..].iter_mut().rev() {
                    *slot = code % (target + 1);
                    code /= target + 1;
                }
                Self { target, values }
            })
            .collect()
    }
}

impl fmt::Display for PointedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P[{}->{}]:", self.source(), self.target)?;
        super::text::write_list(f, &self.values)
    }
}

/// Segal's functor Δ → Γ: `θ(i) = { j : f(i-1) < j <= f(i) }`.
pub fn delta_to_gamma(f: &MonotoneMap) -> GammaMorphism {
    let values = f.values();
    let images = (1..values.len())
        .map(|i| (values[i - 1] + 1..=values[i]).collect())
        .collect();
    GammaMorphism {
        target: f.target(),
        images,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_goes_to_a_singleton() {
        for n in 1..5 {
            for k in 0..n {
                let g = delta_to_gamma(&MonotoneMap::alpha(n, k));
                assert_eq!(g.images(), &[BTreeSet::from([k + 1])]);
            }
        }
    }

    #[test]
    fn gamma_edge_goes_to_j() {
        for n in 1..5 {
            for k in 0..n {
                assert_eq!(
                    delta_to_gamma(&MonotoneMap::gamma(n, k)),
                    GammaMorphism::j(n, k)
                );
            }
        }
    }

    #[test]
    fn identity_windows() {
        let g = delta_to_gamma(&MonotoneMap::identity(2));
        assert_eq!(g, GammaMorphism::identity(2));
    }

    #[test]
    fn dictionary_examples() {
        assert_eq!(
            GammaMorphism::identity(2).to_pointed(),
            PointedMap::identity(2)
        );
        let j1 = GammaMorphism::j(2, 1);
        assert_eq!(j1.to_pointed().values(), &[0, 1, 1]);
        let p = PointedMap::projection(4, 3);
        assert_eq!(p.to_gamma().images(), &[BTreeSet::from([3])]);
        assert_eq!(p.to_gamma().to_pointed(), p);
    }

    #[test]
    fn overlapping_images_are_rejected() {
        let bad = GammaMorphism::new(2, vec![BTreeSet::from([1]), BTreeSet::from([1, 2])]);
        assert!(matches!(bad, Err(IndexError::InvalidMorphism(_))));
        assert!(PointedMap::new(2, vec![1, 0]).is_err());
    }

    #[test]
    fn hom_counts() {
        for m in 0..4 {
            for n in 0..4 {
                assert_eq!(GammaMorphism::hom(m, n).len(), (m + 1).pow(n as u32));
                assert_eq!(PointedMap::hom(m, n).len(), (n + 1).pow(m as u32));
            }
        }
        // empty images are legal
        assert!(GammaMorphism::hom(2, 0).iter().all(|g| g.images().iter().all(|s| s.is_empty())));
    }
}
