//! Canonical text form of morphisms.
//!
//! ```text
//! morphism := delta | idelta | gamma | pointed
//! delta    := "D[" nat "->" nat "]:" list
//! idelta   := "ID[" nat "->" nat "]:" ("asc" | "desc") ":" list
//! gamma    := "G[" nat "->" nat "]:" ("{" list? "}")*
//! pointed  := "P[" nat "->" nat "]:" list
//! list     := nat ("," nat)*
//! nat      := "0" | [1-9][0-9]*
//! ```
//!
//! No whitespace is allowed anywhere, and numbers carry no leading zeros, so
//! every morphism has exactly one spelling.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{
    Category, Direction, GammaMorphism, IndexError, InvMonotoneMap, MonotoneMap, Morphism,
    PointedMap,
};

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, values: &[usize]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// A morphism of any of the four enumerable categories.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnyMorphism {
    Delta(MonotoneMap),
    InvDelta(InvMonotoneMap),
    Gamma(GammaMorphism),
    Pointed(PointedMap),
}

impl AnyMorphism {
    pub fn category(&self) -> Category {
        match self {
            AnyMorphism::Delta(_) => Category::Delta,
            AnyMorphism::InvDelta(_) => Category::InvDelta,
            AnyMorphism::Gamma(_) => Category::Gamma,
            AnyMorphism::Pointed(_) => Category::GammaOp,
        }
    }

    pub fn source(&self) -> usize {
        match self {
            AnyMorphism::Delta(m) => m.source(),
            AnyMorphism::InvDelta(m) => m.source(),
            AnyMorphism::Gamma(m) => m.source(),
            AnyMorphism::Pointed(m) => m.source(),
        }
    }

    pub fn target(&self) -> usize {
        match self {
            AnyMorphism::Delta(m) => m.target(),
            AnyMorphism::InvDelta(m) => m.target(),
            AnyMorphism::Gamma(m) => m.target(),
            AnyMorphism::Pointed(m) => m.target(),
        }
    }

    /// `self ∘ inner`, refusing to mix categories.
    pub fn compose(&self, inner: &Self) -> Result<Self, IndexError> {
        use AnyMorphism::*;
        match (self, inner) {
            (Delta(a), Delta(b)) => a.compose(b).map(Delta),
            (InvDelta(a), InvDelta(b)) => a.compose(b).map(InvDelta),
            (Gamma(a), Gamma(b)) => a.compose(b).map(Gamma),
            (Pointed(a), Pointed(b)) => a.compose(b).map(Pointed),
            _ => Err(IndexError::CategoryMismatch(
                self.category(),
                inner.category(),
            )),
        }
    }
}

impl fmt::Display for AnyMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyMorphism::Delta(m) => m.fmt(f),
            AnyMorphism::InvDelta(m) => m.fmt(f),
            AnyMorphism::Gamma(m) => m.fmt(f),
            AnyMorphism::Pointed(m) => m.fmt(f),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    rest: &'a str,
}

impl<'a> Parser<'a> {
    fn error(&self, reason: impl Into<String>) -> IndexError {
        IndexError::Parse {
            text: self.text.to_string(),
            reason: reason.into(),
        }
    }

    fn eat(&mut self, token: &str) -> Result<(), IndexError> {
        match self.rest.strip_prefix(token) {
            Some(rest) => {
                self.rest = rest;
                Ok(())
            }
            None => Err(self.error(format!("expected `{token}` at `{}`", self.rest))),
        }
    }

    fn try_eat(&mut self, token: &str) -> bool {
        self.eat(token).is_ok()
    }

    fn nat(&mut self) -> Result<usize, IndexError> {
        let len = self.rest.bytes().take_while(u8::is_ascii_digit).count();
        let digits = &self.rest[..len];
        if digits.is_empty() {
            return Err(self.error(format!("expected a number at `{}`", self.rest)));
        }
        if digits.len() > 1 && digits.starts_with('0') {
            return Err(self.error(format!("leading zero in `{digits}`")));
        }
        let value = digits
            .parse()
            .map_err(|_| self.error(format!("number `{digits}` is too large")))?;
        self.rest = &self.rest[len..];
        Ok(value)
    }

    fn list(&mut self) -> Result<Vec<usize>, IndexError> {
        let mut out = vec![self.nat()?];
        while self.try_eat(",") {
            out.push(self.nat()?);
        }
        Ok(out)
    }

    fn header(&mut self) -> Result<(usize, usize), IndexError> {
        self.eat("[")?;
        let m = self.nat()?;
        self.eat("->")?;
        let n = self.nat()?;
        self.eat("]:")?;
        Ok((m, n))
    }

    fn finish(&self) -> Result<(), IndexError> {
        if self.rest.is_empty() {
            Ok(())
        } else {
            Err(self.error(format!("trailing input `{}`", self.rest)))
        }
    }

    fn check_len(&self, expected: usize, got: usize) -> Result<(), IndexError> {
        if expected != got {
            return Err(self.error(format!("header promises {expected} entries, found {got}")));
        }
        Ok(())
    }
}

impl FromStr for AnyMorphism {
    type Err = IndexError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { text, rest: text };
        // "ID" must be tried before "D"
        let parsed = if p.try_eat("ID") {
            let (m, n) = p.header()?;
            let direction = if p.try_eat("asc:") {
                Direction::Ascending
            } else if p.try_eat("desc:") {
                Direction::Descending
            } else {
                return Err(p.error("expected `asc:` or `desc:`"));
            };
            let values = p.list()?;
            p.check_len(m + 1, values.len())?;
            AnyMorphism::InvDelta(InvMonotoneMap::with_direction(n, direction, values)?)
        } else if p.try_eat("D") {
            let (m, n) = p.header()?;
            let values = p.list()?;
            p.check_len(m + 1, values.len())?;
            AnyMorphism::Delta(MonotoneMap::new(n, values)?)
        } else if p.try_eat("G") {
            let (m, n) = p.header()?;
            let mut images = Vec::new();
            while p.try_eat("{") {
                let image: Vec<usize> = if p.try_eat("}") {
                    Vec::new()
                } else {
                    let l = p.list()?;
                    p.eat("}")?;
                    l
                };
                if image.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(p.error("image sets must be listed strictly increasing"));
                }
                images.push(image.into_iter().collect::<BTreeSet<_>>());
            }
            p.check_len(m, images.len())?;
            AnyMorphism::Gamma(GammaMorphism::new(n, images)?)
        } else if p.try_eat("P") {
            let (m, n) = p.header()?;
            let values = p.list()?;
            p.check_len(m + 1, values.len())?;
            AnyMorphism::Pointed(PointedMap::new(n, values)?)
        } else {
            return Err(p.error("expected one of `D`, `ID`, `G`, `P`"));
        };
        p.finish()?;
        Ok(parsed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_examples_round_trip() {
        for s in [
            "D[1->3]:0,2",
            "ID[2->2]:desc:2,1,0",
            "ID[0->4]:asc:3",
            "G[2->3]:{1}{2,3}",
            "G[2->0]:{}{}",
            "G[0->2]:",
            "P[2->1]:0,1,1",
        ] {
            let m: AnyMorphism = s.parse().unwrap();
            assert_eq!(m.to_string(), s);
        }
    }

    #[test]
    fn non_canonical_spellings_are_rejected() {
        for s in [
            "D[1->3]:0, 2",
            "D[1->3]:0,02",
            "D[1->3]:+0,2",
            "D[2->3]:0,2",
            "ID[2->2]:desc:1,1,1",
            "G[2->3]:{2,1}{3}",
            "G[2->3]:{1}",
            "P[1->1]:1,1",
            "X[1->1]:0,1",
            "D[1->3]:0,2;",
        ] {
            assert!(s.parse::<AnyMorphism>().is_err(), "{s} parsed");
        }
    }

    #[test]
    fn composition_refuses_mixed_categories() {
        let d: AnyMorphism = "D[0->0]:0".parse().unwrap();
        let p: AnyMorphism = "P[0->0]:0".parse().unwrap();
        assert!(matches!(
            d.compose(&p),
            Err(IndexError::CategoryMismatch(Category::Delta, Category::GammaOp))
        ));
    }
}
