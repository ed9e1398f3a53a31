use std::fmt;

use super::{IndexError, InvMonotoneMap, Morphism};

/// A morphism of the object-decorated (invertible) simplicial category.
///
/// Objects are ranks labelled by a tuple of objects `(x_0, …, x_n)`; a map
/// `θ: [m]_{y} -> [n]_{x}` is allowed exactly when `y_i = x_{θ(i)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedMap {
    underlying: InvMonotoneMap,
    source_objects: Vec<usize>,
    target_objects: Vec<usize>,
}

impl DecoratedMap {
    pub fn new(
        underlying: InvMonotoneMap,
        source_objects: Vec<usize>,
        target_objects: Vec<usize>,
    ) -> Result<Self, IndexError> {
        if source_objects.len() != underlying.source() + 1
            || target_objects.len() != underlying.target() + 1
        {
            return Err(IndexError::InvalidMorphism(format!(
                "object tuples of lengths {} and {} do not fit {underlying}",
                source_objects.len(),
                target_objects.len()
            )));
        }
        for (i, &y) in source_objects.iter().enumerate() {
            if target_objects[underlying.apply(i)] != y {
                return Err(IndexError::InvalidMorphism(format!(
                    "object {y} at position {i} differs from target object {} at {}",
                    target_objects[underlying.apply(i)],
                    underlying.apply(i)
                )));
            }
        }
        Ok(Self {
            underlying,
            source_objects,
            target_objects,
        })
    }

    /// The unique compatible decoration of `θ` with the given target objects.
    pub fn pullback(underlying: InvMonotoneMap, target_objects: Vec<usize>) -> Result<Self, IndexError> {
        if target_objects.len() != underlying.target() + 1 {
            return Err(IndexError::InvalidMorphism(format!(
                "{} target objects do not fit {underlying}",
                target_objects.len()
            )));
        }
        let source_objects = underlying
            .values()
            .iter()
            .map(|&v| target_objects[v])
            .collect();
        Ok(Self {
            underlying,
            source_objects,
            target_objects,
        })
    }

    /// `[n]_{x_0..x_n} -> [n]_{x_n..x_0}` read as the flip.
    pub fn flip(target_objects: Vec<usize>) -> Self {
        let n = target_objects.len() - 1;
        Self::pullback(InvMonotoneMap::flip(n), target_objects).expect("flip fits its objects")
    }

    pub fn underlying(&self) -> &InvMonotoneMap {
        &self.underlying
    }

    pub fn source_objects(&self) -> &[usize] {
        &self.source_objects
    }

    pub fn target_objects(&self) -> &[usize] {
        &self.target_objects
    }

    /// `self ∘ inner`; the decorations must agree at the middle object.
    pub fn compose(&self, inner: &Self) -> Result<Self, IndexError> {
        let underlying = self.underlying.compose(&inner.underlying)?;
        if inner.target_objects != self.source_objects {
            return Err(IndexError::InvalidMorphism(format!(
                "middle decorations differ: {:?} vs {:?}",
                inner.target_objects, self.source_objects
            )));
        }
        Self::new(
            underlying,
            inner.source_objects.clone(),
            self.target_objects.clone(),
        )
    }

    /// Every decorated map into `[n]_{target_objects}` from rank `m`.
    pub fn hom_into(m: usize, target_objects: &[usize]) -> Vec<Self> {
        let n = target_objects.len() - 1;
        InvMonotoneMap::hom(m, n)
            .into_iter()
            .map(|u| Self::pullback(u, target_objects.to_vec()).expect("lengths fit"))
            .collect()
    }
}

impl fmt::Display for DecoratedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@", self.underlying)?;
        super::text::write_list(f, &self.source_objects)?;
        f.write_str(">")?;
        super::text::write_list(f, &self.target_objects)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::MonotoneMap;

    #[test]
    fn faces_drop_an_object() {
        let d1 = MonotoneMap::face(2, 1);
        let m = DecoratedMap::pullback(d1.into(), vec![0, 1, 0]).unwrap();
        assert_eq!(m.source_objects(), &[0, 0]);
    }

    #[test]
    fn flip_reverses_objects() {
        let f = DecoratedMap::flip(vec![0, 1, 1]);
        assert_eq!(f.source_objects(), &[1, 1, 0]);
    }

    #[test]
    fn incompatible_decoration_is_rejected() {
        let id = InvMonotoneMap::identity(1);
        assert!(DecoratedMap::new(id, vec![0, 1], vec![1, 0]).is_err());
    }

    #[test]
    fn composition_keeps_compatibility() {
        let objs = vec![0, 1, 0];
        for outer in DecoratedMap::hom_into(2, &objs) {
            for inner in DecoratedMap::hom_into(1, outer.source_objects()) {
                let c = outer.compose(&inner).unwrap();
                for (i, &y) in c.source_objects().iter().enumerate() {
                    assert_eq!(y, objs[c.underlying().apply(i)]);
                }
            }
        }
    }
}
