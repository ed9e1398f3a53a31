use std::fmt;

use serde::{Deserialize, Serialize};

use super::{check_composable, Category, Generator, IndexError, MonotoneMap, Morphism};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Ascending,
    Descending,
}

/// A morphism `I[m] -> I[n]` of the invertible simplicial category: a weakly
/// monotone map of either direction.
///
/// Constant maps are always stored as ascending, so every morphism has a
/// single representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvMonotoneMap {
    target: usize,
    direction: Direction,
    values: Vec<usize>,
}

fn is_constant(values: &[usize]) -> bool {
    values.windows(2).all(|w| w[0] == w[1])
}

/// If `i < j < k` and `i`, `k` have the same image, so does `j`.
pub fn betweenness_check(values: &[usize]) -> bool {
    for i in 0..values.len() {
        for k in i + 2..values.len() {
            if values[i] == values[k] && values[i + 1..k].iter().any(|&v| v != values[i]) {
                return false;
            }
        }
    }
    true
}

impl InvMonotoneMap {
    /// Build from values, inferring the direction.
    pub fn new(target: usize, values: Vec<usize>) -> Result<Self, IndexError> {
        if values.is_empty() {
            return Err(IndexError::InvalidMorphism(
                "a map out of I[m] needs m+1 values".into(),
            ));
        }
        if let Some(v) = values.iter().find(|&&v| v > target) {
            return Err(IndexError::InvalidMorphism(format!(
                "value {v} outside [0, {target}]"
            )));
        }
        let direction = if values.windows(2).all(|w| w[0] <= w[1]) {
            Direction::Ascending
        } else if values.windows(2).all(|w| w[0] >= w[1]) {
            Direction::Descending
        } else {
            return Err(IndexError::InvalidMorphism(format!(
                "values {values:?} are not monotone"
            )));
        };
        Ok(Self {
            target,
            direction,
            values,
        })
    }

    /// Build from an explicit `(direction, values)` pair, rejecting
    /// non-canonical forms.
    pub fn with_direction(
        target: usize,
        direction: Direction,
        values: Vec<usize>,
    ) -> Result<Self, IndexError> {
        let map = Self::new(target, values)?;
        if map.direction != direction {
            let reason = if is_constant(&map.values) {
                "constant maps are canonically ascending"
            } else {
                "values do not match the stated direction"
            };
            return Err(IndexError::InvalidMorphism(reason.into()));
        }
        Ok(map)
    }

    pub(crate) fn new_unchecked(target: usize, values: Vec<usize>) -> Self {
        Self::new(target, values).expect("monotone values")
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn is_ascending(&self) -> bool {
        self.direction == Direction::Ascending
    }

    pub fn is_constant(&self) -> bool {
        is_constant(&self.values)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    /// The flip of `I[n]`, `i ↦ n - i`.
    pub fn flip(n: usize) -> Self {
        Self::new_unchecked(n, (0..=n).rev().collect())
    }

    /// The edge `I[1] -> I[n]` with `0 ↦ k`, `1 ↦ k+1`.
    pub fn beta(n: usize, k: usize) -> Self {
        MonotoneMap::alpha(n, k).into()
    }

    /// The underlying order-preserving map, if ascending.
    pub fn as_monotone(&self) -> Option<MonotoneMap> {
        self.is_ascending()
            .then(|| MonotoneMap::new_unchecked(self.target, self.values.clone()))
    }

    /// Factor into generators: `self = g[0] ∘ g[1] ∘ … ∘ g[r-1]`.
    ///
    /// An ascending map factors as (injection) ∘ (surjection), the injection
    /// as cofaces with decreasing indices and the surjection as
    /// codegeneracies with increasing indices. A descending map is the flip
    /// of the target composed with an ascending map.
    pub fn decompose(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        let ascending = if self.is_ascending() {
            self.values.clone()
        } else {
            out.push(Generator::Flip { rank: self.target });
            self.values.iter().map(|&v| self.target - v).collect()
        };

        // image of the ascending part
        let mut image: Vec<usize> = ascending.clone();
        image.dedup();
        let missing: Vec<usize> = (0..=self.target).filter(|v| !image.contains(v)).collect();
        let mut rank = self.target;
        for &c in missing.iter().rev() {
            out.push(Generator::Face { rank, index: c });
            rank -= 1;
        }

        // positions where the surjection repeats a value
        let repeats: Vec<usize> = (0..ascending.len() - 1)
            .filter(|&i| ascending[i] == ascending[i + 1])
            .collect();
        for &j in &repeats {
            out.push(Generator::Degeneracy { rank, index: j });
            rank += 1;
        }
        debug_assert_eq!(rank, self.source());
        out
    }
}

impl From<MonotoneMap> for InvMonotoneMap {
    fn from(m: MonotoneMap) -> Self {
        Self {
            target: m.target(),
            direction: Direction::Ascending,
            values: m.values().to_vec(),
        }
    }
}

impl Morphism for InvMonotoneMap {
    const CATEGORY: Category = Category::InvDelta;

    fn source(&self) -> usize {
        self.values.len() - 1
    }

    fn target(&self) -> usize {
        self.target
    }

    fn identity(rank: usize) -> Self {
        MonotoneMap::identity(rank).into()
    }

    fn compose(&self, inner: &Self) -> Result<Self, IndexError> {
        check_composable(inner.target, self.source())?;
        Ok(Self::new_unchecked(
            self.target,
            inner.values.iter().map(|&v| self.values[v]).collect(),
        ))
    }

    fn hom(source: usize, target: usize) -> Vec<Self> {
        let ascending = MonotoneMap::hom(source, target);
        let mut out: Vec<Self> = ascending.iter().cloned().map(Self::from).collect();
        out.extend(ascending.into_iter().filter_map(|m| {
            let desc: Vec<usize> = m.values().iter().rev().copied().collect();
            (!is_constant(&desc)).then_some(Self {
                target,
                direction: Direction::Descending,
                values: desc,
            })
        }));
        out
    }
}

impl fmt::Display for InvMonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = match self.direction {
            Direction::Ascending => "asc",
            Direction::Descending => "desc",
        };
        write!(f, "ID[{}->{}]:{dir}:", self.source(), self.target)?;
        super::text::write_list(f, &self.values)
    }
}
