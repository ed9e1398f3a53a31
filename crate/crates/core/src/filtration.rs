//! Word-length filtrations of free-group nerves and their pushout
//! attachments.
//!
//! Two variants live on truncated free nerves (levels `<= J`, total word
//! length `<= K`):
//!
//! - invertible: `Ψ_k ⊆ Inerve(F_n)` holds the simplices of total word
//!   length `<= k`;
//! - Bousfield: `Ψ_k ⊆ nerve(F_1)` is read in initial-segment coordinates
//!   `n_ℓ = m_1 + … + m_ℓ` of a simplex `(x^{m_1}|…|x^{m_j})`. The membership
//!   predicate bounds each `n_ℓ` (`[0,1]` for `k <= 2`, `[-1,1]` for
//!   `k = 3`, `[-k+1, k-2]` beyond) and `Σ|n_ℓ| <= k`; it is not closed under
//!   degeneracies, so stages are the subobjects it generates. `Ψ_1` is the
//!   subobject generated by the edge `x`; the closure of its predicate is
//!   reported alongside.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::FreeWord;
use crate::error::{Error, Result};
use crate::index::{InvMonotoneMap, MonotoneMap, Morphism};
use crate::nerve::{FreeGroup, Nerve, Simplex};
use crate::presheaf::{
    coproduct, enumerate_maps, pushout, reduce_with_map, representable, spine, DiagramMorphism,
    MapSearch, Shape, SpineKind, SubDiagram, TruncatedDiagram,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum Variant {
    Invertible { generators: usize },
    Bousfield,
}

impl Variant {
    fn shape(self) -> Shape {
        match self {
            Variant::Invertible { .. } => Shape::Invertible,
            Variant::Bousfield => Shape::Simplicial,
        }
    }

    fn generators(self) -> usize {
        match self {
            Variant::Invertible { generators } => generators,
            Variant::Bousfield => 1,
        }
    }
}

/// A free nerve truncated at level `J` and total word length `K`, with the
/// simplices behind its elements.
pub struct FreeNerve {
    variant: Variant,
    model: Nerve<FreeGroup>,
    diagram: Arc<TruncatedDiagram>,
}

impl FreeNerve {
    pub fn new(variant: Variant, truncation: usize, bound: usize) -> Result<Self> {
        if variant.generators() == 0 || bound == 0 {
            return Err(Error::Precondition(
                "free nerves need at least one generator and a positive word bound".into(),
            ));
        }
        let model = Nerve::new(
            FreeGroup {
                generators: variant.generators(),
                bound,
            },
            variant.shape(),
            truncation,
            Some(bound),
        )?;
        let diagram = Arc::new(TruncatedDiagram::materialize(&model, truncation)?);
        Ok(Self {
            variant,
            model,
            diagram,
        })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn model(&self) -> &Nerve<FreeGroup> {
        &self.model
    }

    pub fn diagram(&self) -> &Arc<TruncatedDiagram> {
        &self.diagram
    }

    pub fn truncation(&self) -> usize {
        self.diagram.rank()
    }

    pub fn bound(&self) -> usize {
        self.model.algebra().bound
    }

    pub fn simplex(&self, level: usize, x: usize) -> &Simplex<FreeWord> {
        self.model.simplex(level, x)
    }

    pub fn index_of(&self, s: &Simplex<FreeWord>) -> Option<usize> {
        self.model.index_of(s.arrows.len(), s)
    }

    /// The element with the given bar word, e.g. `(x|x^-1)`.
    pub fn find(&self, level: usize, label: &str) -> Option<usize> {
        self.diagram.labels(level).iter().position(|l| l == label)
    }
}

pub fn total_length(s: &Simplex<FreeWord>) -> usize {
    s.arrows.iter().map(FreeWord::len).sum()
}

/// Initial-segment exponent sums of a one-generator simplex.
pub fn gamma_coordinates(s: &Simplex<FreeWord>) -> Vec<i64> {
    s.arrows
        .iter()
        .scan(0, |acc, w| {
            *acc += w.exponent();
            Some(*acc)
        })
        .collect()
}

/// The one-generator simplex with the given initial-segment exponents.
pub fn from_gamma_coordinates(coords: &[i64]) -> Simplex<FreeWord> {
    let mut prev = 0;
    let arrows = coords
        .iter()
        .map(|&c| {
            let w = FreeWord::power(1, 0, c - prev);
            prev = c;
            w
        })
        .collect();
    Simplex { start: 0, arrows }
}

/// The Bousfield membership predicate for stage `k`.
pub fn bousfield_predicate(k: usize, coords: &[i64]) -> bool {
    let k = k as i64;
    let (lo, hi) = match k {
        0..=2 => (0, 1),
        3 => (-1, 1),
        _ => (-k + 1, k - 2),
    };
    coords.iter().all(|&c| lo <= c && c <= hi) && coords.iter().map(|c| c.abs()).sum::<i64>() <= k
}

fn member(variant: Variant, k: usize, s: &Simplex<FreeWord>) -> bool {
    match variant {
        Variant::Invertible { .. } => total_length(s) <= k,
        Variant::Bousfield => bousfield_predicate(k, &gamma_coordinates(s)),
    }
}

#[derive(Debug, Clone)]
pub struct FiltrationStage {
    pub variant: Variant,
    pub k: usize,
    pub stage: SubDiagram,
    /// Elements satisfying the membership predicate, per level.
    pub raw: Vec<BTreeSet<usize>>,
    /// For the Bousfield `Ψ_1`: the subobject generated by the predicate,
    /// which is larger than the chosen stage.
    pub closure_reading: Option<SubDiagram>,
}

impl FiltrationStage {
    /// Per level, how many elements the closure added to the predicate.
    pub fn added_by_closure(&self) -> Vec<usize> {
        (0..self.raw.len())
            .map(|j| self.stage.selected(j).difference(&self.raw[j]).count())
            .collect()
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.stage.level_sizes()
    }
}

/// `Ψ_k` inside an already built free nerve.
pub fn stage(nerve: &FreeNerve, k: usize) -> Result<FiltrationStage> {
    if k > nerve.bound() {
        return Err(Error::BoundExceeded {
            bound: nerve.bound(),
            morphism: format!("stage {k}"),
            element: "the truncated free nerve".into(),
        });
    }
    let parent = nerve.diagram().clone();
    let raw: Vec<BTreeSet<usize>> = (0..=parent.rank())
        .map(|j| {
            (0..parent.level_size(j))
                .filter(|&x| member(nerve.variant, k, nerve.simplex(j, x)))
                .collect()
        })
        .collect();
    let (stage, closure_reading) = match nerve.variant {
        Variant::Invertible { .. } => (SubDiagram::new(parent, raw.clone())?, None),
        Variant::Bousfield if k == 1 => {
            let x = nerve.find(1, "(x)").ok_or(Error::RankExceeded {
                needed: 1,
                truncation: parent.rank(),
            })?;
            let generated = SubDiagram::generated(parent.clone(), [(1, x)])?;
            (generated, Some(SubDiagram::closure(parent, &raw)?))
        }
        Variant::Bousfield => (SubDiagram::closure(parent, &raw)?, None),
    };
    Ok(FiltrationStage {
        variant: nerve.variant,
        k,
        stage,
        raw,
        closure_reading,
    })
}

fn check_bounds(k: usize, truncation: usize, bound: usize) -> Result<()> {
    if truncation < 2 {
        return Err(Error::Precondition("filtrations need truncation J >= 2".into()));
    }
    if k > bound {
        return Err(Error::BoundExceeded {
            bound,
            morphism: format!("stage {k}"),
            element: "the truncated free nerve".into(),
        });
    }
    Ok(())
}

/// `Ψ_k ⊆ Inerve(F_n)`: simplices of total word length `<= k`.
pub fn psi_invertible(generators: usize, k: usize, truncation: usize, bound: usize) -> Result<FiltrationStage> {
    check_bounds(k, truncation, bound)?;
    stage(&FreeNerve::new(Variant::Invertible { generators }, truncation, bound)?, k)
}

/// The Bousfield stage `Ψ_k ⊆ nerve(F_1)`.
pub fn psi_bousfield(k: usize, truncation: usize, bound: usize) -> Result<FiltrationStage> {
    check_bounds(k, truncation, bound)?;
    stage(&FreeNerve::new(Variant::Bousfield, truncation, bound)?, k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageSummary {
    pub k: usize,
    pub level_sizes: Vec<usize>,
    pub added_by_closure: Vec<usize>,
    /// Level sizes of the closure reading, where one is reported.
    pub closure_reading: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExhaustionLevel {
    pub level: usize,
    pub nerve_size: usize,
    pub union_size: usize,
    /// Bar words missing from the union, up to a few.
    pub missing: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub variant: Variant,
    pub k_max: usize,
    pub truncation: usize,
    pub word_bound: usize,
    pub stages: Vec<StageSummary>,
    /// `Ψ_k ⊆ Ψ_{k+1}` for every `k < k_max`.
    pub monotone: bool,
    /// Every stage has a single point at level 0.
    pub reduced: bool,
    /// Per-level comparison with the whole truncated nerve, once `k_max`
    /// reaches the word bound.
    pub exhaustion: Option<Vec<ExhaustionLevel>>,
}

impl ChainReport {
    pub fn exhausts(&self) -> Option<bool> {
        self.exhaustion
            .as_ref()
            .map(|levels| levels.iter().all(|l| l.missing.is_empty()))
    }
}

/// Build `Ψ_0 ⊆ … ⊆ Ψ_{k_max}` and compare their union with the nerve.
pub fn stage_chain_report(variant: Variant, k_max: usize, truncation: usize, bound: usize) -> Result<ChainReport> {
    check_bounds(k_max, truncation, bound)?;
    let nerve = FreeNerve::new(variant, truncation, bound)?;
    let stages = (0..=k_max).map(|k| stage(&nerve, k)).collect::<Result<Vec<_>>>()?;
    let monotone = stages.windows(2).all(|w| w[0].stage.is_subset(&w[1].stage));
    let reduced = stages.iter().all(|s| s.stage.selected(0).len() == 1);
    let exhaustion = (k_max >= bound).then(|| {
        (0..=truncation)
            .map(|j| {
                let union: BTreeSet<usize> = stages.iter().flat_map(|s| s.stage.selected(j).iter().copied()).collect();
                ExhaustionLevel {
                    level: j,
                    nerve_size: nerve.diagram().level_size(j),
                    union_size: union.len(),
                    missing: (0..nerve.diagram().level_size(j))
                        .filter(|x| !union.contains(x))
                        .take(8)
                        .map(|x| nerve.diagram().label(j, x).to_string())
                        .collect(),
                }
            })
            .collect()
    });
    Ok(ChainReport {
        variant,
        k_max,
        truncation,
        word_bound: bound,
        stages: stages
            .iter()
            .map(|s| StageSummary {
                k: s.k,
                level_sizes: s.level_sizes(),
                added_by_closure: s.added_by_closure(),
                closure_reading: s.closure_reading.as_ref().map(SubDiagram::level_sizes),
            })
            .collect(),
        monotone,
        reduced,
        exhaustion,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AttachmentLevel {
    pub level: usize,
    pub stage_size: usize,
    pub pushout_size: usize,
    pub next_stage_size: usize,
    pub image_size: usize,
    pub surjective: bool,
    pub injective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AttachmentReport {
    pub variant: Variant,
    pub k: usize,
    pub truncation: usize,
    pub word_bound: usize,
    /// Number of cells glued in: attaching maps for `k = 1`, simplices
    /// beyond.
    pub attaching_maps: usize,
    /// The simplex each cell maps onto.
    pub cells: Vec<String>,
    /// The comparison `pushout -> Ψ_{k+1}` is a function.
    pub well_defined: bool,
    /// The comparison lands inside `Ψ_{k+1}`.
    pub contained: bool,
    pub levels: Vec<AttachmentLevel>,
}

impl AttachmentReport {
    pub fn surjective(&self) -> bool {
        self.well_defined && self.contained && self.levels.iter().all(|l| l.surjective)
    }

    pub fn isomorphic(&self) -> bool {
        self.surjective() && self.levels.iter().all(|l| l.injective)
    }
}

/// A reduced representable with the index morphism behind each element.
struct Cell {
    diagram: Arc<TruncatedDiagram>,
    thetas: Vec<Vec<InvMonotoneMap>>,
}

impl Cell {
    fn new(shape: Shape, n: usize, truncation: usize) -> Result<Self> {
        let (reduced, quotient) = reduce_with_map(&representable(shape, n, truncation))?;
        let thetas = (0..=truncation)
            .map(|m| {
                let hom: Vec<InvMonotoneMap> = match shape {
                    Shape::Simplicial => MonotoneMap::hom(m, n).into_iter().map(Into::into).collect(),
                    Shape::Invertible => InvMonotoneMap::hom(m, n),
                };
                let mut pick: Vec<Option<InvMonotoneMap>> = vec![None; reduced.level_size(m)];
                for (x, theta) in hom.into_iter().enumerate() {
                    pick[quotient.apply(m, x)].get_or_insert(theta);
                }
                pick.into_iter().map(|t| t.expect("quotients are onto")).collect()
            })
            .collect();
        Ok(Self {
            diagram: Arc::new(reduced),
            thetas,
        })
    }

    /// The characteristic map of `sigma` into the free nerve.
    fn characteristic(&self, nerve: &FreeNerve, sigma: &Simplex<FreeWord>) -> Result<DiagramMorphism> {
        let components = self
            .thetas
            .iter()
            .map(|level| {
                level
                    .iter()
                    .map(|theta| {
                        let image = nerve.model().act_on_simplex(theta, sigma)?;
                        nerve.index_of(&image).ok_or_else(|| Error::BoundExceeded {
                            bound: nerve.bound(),
                            morphism: theta.to_string(),
                            element: nerve.model().render(sigma),
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DiagramMorphism::new(components))
    }
}

/// Position of each parent element in a subobject's own diagram.
fn local_index(sub: &SubDiagram) -> Vec<Vec<Option<usize>>> {
    (0..sub.parent().rank() + 1)
        .map(|j| {
            let mut l = vec![None; sub.parent().level_size(j)];
            for (i, &x) in sub.selected(j).iter().enumerate() {
                l[x] = Some(i);
            }
            l
        })
        .collect()
}

/// Nondegenerate simplices of length `len` with every entry a nonempty word
/// and total length within `budget`.
fn nondegenerate_simplices(generators: usize, len: usize, budget: usize) -> Vec<Simplex<FreeWord>> {
    let mut out = vec![(Vec::new(), 0usize)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|(arrows, spent): (Vec<FreeWord>, usize)| {
                (1..=budget.saturating_sub(spent))
                    .flat_map(|l| FreeWord::all_of_length(generators, l))
                    .map(move |w| {
                        let mut a = arrows.clone();
                        let s = spent + w.len();
                        a.push(w);
                        (a, s)
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out.into_iter()
        .map(|(arrows, _)| Simplex { start: 0, arrows })
        .collect()
}

struct Attachment {
    /// Pieces `A_i` with their inclusion into the cell and map into `Ψ_k`.
    pieces: Vec<(TruncatedDiagram, DiagramMorphism, DiagramMorphism)>,
    /// Characteristic maps into the free nerve, one per piece.
    characteristic: Vec<DiagramMorphism>,
    cells: Vec<String>,
}

fn spine_attachment(
    nerve: &FreeNerve,
    cell: &Cell,
    psi: &SubDiagram,
    limit: Option<usize>,
) -> Result<Attachment> {
    let (kind, mixed) = match nerve.variant {
        Variant::Invertible { .. } => (SpineKind::IG, false),
        Variant::Bousfield => (SpineKind::H, true),
    };
    let truncation = nerve.truncation();
    let sp = spine(kind, 2, truncation, true)?;
    let (spine_diagram, inclusion) = sp.to_diagram();
    let (psi_diagram, psi_inclusion) = psi.to_diagram();
    let maps = enumerate_maps(
        &spine_diagram,
        &psi_diagram,
        MapSearch {
            injective: false,
            limit,
        },
    )?;
    // the two distinguished edges, as elements of the spine
    let edge_labels: [&str; 2] = if mixed { ["0,1", "0,2"] } else { ["0,1", "1,2"] };
    let edges: Vec<usize> = edge_labels
        .iter()
        .map(|l| {
            let in_cell = cell.diagram.labels(1).iter().position(|m| m == l).expect("edge of [2]");
            (0..spine_diagram.level_size(1))
                .find(|&s| inclusion.apply(1, s) == in_cell)
                .expect("spine contains its edges")
        })
        .collect();
    let mut out = Attachment {
        pieces: Vec::new(),
        characteristic: Vec::new(),
        cells: Vec::new(),
    };
    for m in maps {
        let words: Vec<FreeWord> = edges
            .iter()
            .map(|&e| nerve.simplex(1, psi_inclusion.apply(1, m.apply(1, e))).arrows[0].clone())
            .collect();
        let second = if mixed {
            words[0].invert().multiply(&words[1])
        } else {
            words[1].clone()
        };
        let sigma = Simplex {
            start: 0,
            arrows: vec![words[0].clone(), second],
        };
        out.characteristic.push(cell.characteristic(nerve, &sigma)?);
        out.cells.push(nerve.model().render(&sigma));
        out.pieces.push((spine_diagram.clone(), inclusion.clone(), m));
    }
    Ok(out)
}

fn preimage_attachment(
    nerve: &FreeNerve,
    cell: &Cell,
    psi: &SubDiagram,
    k: usize,
    limit: Option<usize>,
) -> Result<Attachment> {
    let budget = match nerve.variant {
        Variant::Invertible { .. } => k + 1,
        Variant::Bousfield => nerve.bound(),
    };
    let local = local_index(psi);
    let mut out = Attachment {
        pieces: Vec::new(),
        characteristic: Vec::new(),
        cells: Vec::new(),
    };
    for sigma in nondegenerate_simplices(nerve.variant.generators(), k + 1, budget) {
        if limit.is_some_and(|l| out.pieces.len() >= l) {
            break;
        }
        if !member(nerve.variant, k + 1, &sigma) {
            continue;
        }
        let chi = cell.characteristic(nerve, &sigma)?;
        let inside = chi
            .components()
            .iter()
            .enumerate()
            .all(|(j, c)| c.iter().all(|&x| psi.contains(j, x)));
        if inside {
            continue;
        }
        let piece = SubDiagram::preimage(&chi, cell.diagram.clone(), psi)?;
        let (a, inclusion) = piece.to_diagram();
        let to_psi = DiagramMorphism::new(
            inclusion
                .components()
                .iter()
                .enumerate()
                .map(|(j, c)| c.iter().map(|&r| local[j][chi.apply(j, r)].expect("preimage")).collect())
                .collect(),
        );
        out.cells.push(nerve.model().render(&sigma));
        out.characteristic.push(chi);
        out.pieces.push((a, inclusion, to_psi));
    }
    Ok(out)
}

/// Glue cells onto `Ψ_k` and compare the pushout with `Ψ_{k+1}`.
pub fn attachment_compare(variant: Variant, k: usize, truncation: usize, bound: usize) -> Result<AttachmentReport> {
    attachment_compare_limited(variant, k, truncation, bound, None)
}

/// [`attachment_compare`] admitting at most `limit` cells.
pub fn attachment_compare_limited(
    variant: Variant,
    k: usize,
    truncation: usize,
    bound: usize,
    limit: Option<usize>,
) -> Result<AttachmentReport> {
    if k == 0 {
        return Err(Error::Precondition("attachments start at k = 1".into()));
    }
    check_bounds(k + 1, truncation, bound)?;
    let nerve = FreeNerve::new(variant, truncation, bound)?;
    let psi = stage(&nerve, k)?.stage;
    let next = stage(&nerve, k + 1)?.stage;
    let cell = Cell::new(variant.shape(), k + 1, truncation)?;
    let att = if k == 1 {
        spine_attachment(&nerve, &cell, &psi, limit)?
    } else {
        preimage_attachment(&nerve, &cell, &psi, k, limit)?
    };

    let shape = variant.shape();
    let a_parts: Vec<&TruncatedDiagram> = att.pieces.iter().map(|(a, _, _)| a).collect();
    let b_parts: Vec<&TruncatedDiagram> = att.pieces.iter().map(|_| cell.diagram.as_ref()).collect();
    let (a_sum, a_inj) = coproduct(shape, truncation, &a_parts)?;
    let (b_sum, b_inj) = coproduct(shape, truncation, &b_parts)?;
    let (psi_diagram, _) = psi.to_diagram();
    let mut f = vec![Vec::new(); truncation + 1];
    let mut g = vec![Vec::new(); truncation + 1];
    for j in 0..=truncation {
        f[j] = vec![0; a_sum.level_size(j)];
        g[j] = vec![0; a_sum.level_size(j)];
        for (i, (a, inclusion, to_psi)) in att.pieces.iter().enumerate() {
            for s in 0..a.level_size(j) {
                let at = a_inj[i].apply(j, s);
                f[j][at] = b_inj[i].apply(j, inclusion.apply(j, s));
                g[j][at] = to_psi.apply(j, s);
            }
        }
    }
    let po = pushout(
        &a_sum,
        &b_sum,
        &psi_diagram,
        &DiagramMorphism::new(f),
        &DiagramMorphism::new(g),
    )?;

    // compare the pushout with Ψ_{k+1} inside the free nerve
    let psi_members: Vec<Vec<usize>> = (0..=truncation).map(|j| psi.selected(j).iter().copied().collect()).collect();
    let mut well_defined = true;
    let mut contained = true;
    let mut levels = Vec::new();
    for j in 0..=truncation {
        let mut value: Vec<Option<usize>> = vec![None; po.diagram.level_size(j)];
        let mut assign = |p: usize, x: usize| match value[p] {
            Some(y) if y != x => well_defined = false,
            _ => value[p] = Some(x),
        };
        for (i, chi) in att.characteristic.iter().enumerate() {
            for r in 0..cell.diagram.level_size(j) {
                assign(po.from_b.apply(j, b_inj[i].apply(j, r)), chi.apply(j, r));
            }
        }
        for (c, &x) in psi_members[j].iter().enumerate() {
            assign(po.from_c.apply(j, c), x);
        }
        let image: BTreeSet<usize> = value.iter().flatten().copied().collect();
        if !image.is_subset(next.selected(j)) {
            contained = false;
        }
        levels.push(AttachmentLevel {
            level: j,
            stage_size: psi.selected(j).len(),
            pushout_size: po.diagram.level_size(j),
            next_stage_size: next.selected(j).len(),
            image_size: image.len(),
            surjective: next.selected(j).is_subset(&image),
            injective: image.len() == po.diagram.level_size(j),
        });
    }
    Ok(AttachmentReport {
        variant,
        k,
        truncation,
        word_bound: bound,
        attaching_maps: att.pieces.len(),
        cells: att.cells,
        well_defined,
        contained,
        levels,
    })
}
