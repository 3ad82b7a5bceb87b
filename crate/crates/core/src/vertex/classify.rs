//! Vertex and complexity classification of Specht modules.
//!
//! [`classify`] walks a fixed list of rules and stops at the first that
//! applies. The order is part of the contract:
//!
//! 1. weight 0: projective, trivial vertex;
//! 2. `p = 2`, `mu` 2-regular: elementary abelian iff `mu` is a 4-core;
//! 3. `p >= 3`, `mu = (p^p)`: vertex a Sylow subgroup of `S_{p^2}`;
//! 4. `p >= 3`, `mu` a `(p x p)`-partition: non-abelian vertex;
//! 5. `p >= 3`, weight below `p` (abelian defect): `V_1(p)^w`;
//! 6. `p >= 3`, vertex recorded in the literature table;
//! 7. `p >= 3`, simple (asserted) and `p`-regular: abelian iff `p^2`-core;
//! 8. `p = 2`, `mu = (2,2)`: Klein four vertex;
//! 9. otherwise: non-abelian unless `mu` is a `p^2`-core, in which case the
//!    surviving abelian types are returned undecided.
//!
//! Partitions at `p = 2` that are 2-singular (other than `(2,2)`) are only
//! classified when the caller asserts indecomposability.

use serde::Serialize;

use super::block::{block_info, BlockInfo};
use super::gate::{feasible_abelian_types, slack_exponent};
use super::group::SymbolicGroup;
use crate::partition::Partition;
use crate::prime::Prime;
use crate::subgroup::AbelianPType;

/// A Specht module together with facts the caller can vouch for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpechtContext {
    pub mu: Partition,
    pub p: Prime,
    /// Caller's assertion; ignored when indecomposability is automatic.
    pub known_indecomposable: Option<bool>,
    /// Caller's assertion that `S^mu` is simple. Never computed.
    pub known_simple: bool,
    /// Caller's assertion that the vertex is abelian; sharpens complexity bounds.
    pub assume_abelian_vertex: bool,
    pub notes: Vec<String>,
}

impl SpechtContext {
    pub fn new(mu: Partition, p: Prime) -> Self {
        SpechtContext {
            mu,
            p,
            known_indecomposable: None,
            known_simple: false,
            assume_abelian_vertex: false,
            notes: Vec::new(),
        }
    }

    pub fn simple(mut self, yes: bool) -> Self {
        self.known_simple = yes;
        self
    }

    pub fn indecomposable(mut self, yes: bool) -> Self {
        self.known_indecomposable = Some(yes);
        self
    }

    pub fn abelian_vertex(mut self, yes: bool) -> Self {
        self.assume_abelian_vertex = yes;
        self
    }

    /// `S^mu` is indecomposable for odd `p`, and for `p = 2` when `mu` is 2-regular.
    pub fn auto_indecomposable(&self) -> bool {
        self.p.get() >= 3 || self.mu.is_p_regular(self.p)
    }

    pub fn resolved_indecomposable(&self) -> Option<bool> {
        if self.auto_indecomposable() {
            Some(true)
        } else {
            self.known_indecomposable
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VertexStatus {
    ProjectiveTrivialVertex,
    ElementaryAbelian,
    NonAbelian,
    SylowOfSym,
    KleinFour,
    AbelianFeasibleButUndetermined,
    NotClassified,
}

/// Closed interval of possible complexities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComplexityInterval {
    pub lo: usize,
    pub hi: usize,
}

impl ComplexityInterval {
    pub fn exact(c: usize) -> Self {
        ComplexityInterval { lo: c, hi: c }
    }

    pub fn new(lo: usize, hi: usize) -> Self {
        debug_assert!(lo <= hi);
        ComplexityInterval { lo, hi }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, c: usize) -> bool {
        (self.lo..=self.hi).contains(&c)
    }
}

/// Named results a report relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Citation {
    /// Blocks are labelled by `p`-cores with defect group `Sylow_p(S_{wp})`.
    BlockDefectGroup,
    /// `S^mu` is indecomposable for `p >= 3`, or `p = 2` and `mu` 2-regular.
    SpechtIndecomposable,
    /// A vertex lies in a defect group of the block.
    VertexInDefectGroup,
    /// Complexity is at most the `p`-weight.
    ComplexityAtMostWeight,
    /// An abelian vertex forces a `p^2`-core, with complexity equal to the rank.
    AbelianVertexForcesP2Core,
    /// An abelian vertex is `V_1(p)^w` (odd `p`, or 2-regular at `p = 2`).
    AbelianVertexIsV1PowerWeight,
    /// For 2-regular `mu`: abelian vertex iff elementary abelian iff 4-core.
    TwoRegularFourCore,
    /// 2-regular 4-cores give simple Specht modules isomorphic to Young modules.
    FourCoreSimpleYoung,
    /// Young module vertices are Sylow subgroups of the Young subgroup of `ρ(μ)`.
    YoungModuleVertex,
    /// With abelian defect, weight `w < p` gives vertex of rank `w`.
    AbelianDefectWeight,
    /// `S^{(p^p)}` has complexity `p - 1`.
    RectangleComplexity,
    /// Vertices of `S^{(p^p)}` are Sylow subgroups of `S_{p^2}` for odd `p`.
    RectangleSylowVertex,
    /// For odd `p`, `(p x p)`-partitions have complexity below the weight.
    PxpComplexityBelowWeight,
    /// For odd `p`, `(p x p)`-partitions have non-abelian vertices.
    PxpNonAbelian,
    /// Simple, `p`-regular, odd `p`: abelian vertex iff `p^2`-core.
    SimpleRegularP2Core,
    /// `S^{(2,2)}` in characteristic 2 has the Klein four vertex `V_2(2)`.
    TwoTwoKleinFour,
    /// Abelian vertices at `p = 2` have factors `Z_2` or `Z_4`, and `c <= w <= 2c`.
    AbelianFactorsZ2OrZ4,
    /// Vertex recorded for a specific hook partition.
    HookVertexLiterature,
    /// Whether `p^2`-cores always give abelian vertices is open.
    OpenP2CoreQuestion,
}

/// Trivial-source and simple-Young facts attached to some classifications.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SourceNote {
    pub trivial_source: bool,
    pub simple_young: bool,
}

/// Outcome of [`classify`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexReport {
    pub mu: Partition,
    pub p: Prime,
    pub status: VertexStatus,
    /// Short vertex notation: `1`, `V1(p)^w`, `Sylow_p(S_k)`, `V2(2)`, `non-abelian`,
    /// `undetermined` or `unknown`.
    pub vertex: String,
    pub complexity: ComplexityInterval,
    pub block: BlockInfo,
    pub citations: Vec<Citation>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<SourceNote>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub feasible_types: Vec<AbelianPType>,
}

impl VertexReport {
    /// Rank when the vertex is elementary abelian; the trivial vertex has rank 0.
    pub fn elementary_abelian_rank(&self) -> Option<usize> {
        match self.status {
            VertexStatus::ProjectiveTrivialVertex => Some(0),
            VertexStatus::ElementaryAbelian => Some(self.block.weight),
            _ => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Vertices recorded for individual partitions in the literature on hooks.
fn literature_vertex(mu: &Partition, p: Prime) -> Option<SymbolicGroup> {
    // S^{(7,1^3)} at p = 3: Sylow 3-subgroups of S_6 x S_3.
    if p.get() == 3 && mu.parts() == [7, 1, 1, 1] {
        return Some(SymbolicGroup::SylowOfYoung {
            p,
            parts: vec![6, 3],
        });
    }
    None
}

struct Builder<'a> {
    ctx: &'a SpechtContext,
    block: BlockInfo,
    citations: Vec<Citation>,
    notes: Vec<String>,
}

impl Builder<'_> {
    fn cite(&mut self, c: Citation) -> &mut Self {
        if !self.citations.contains(&c) {
            self.citations.push(c);
        }
        self
    }

    fn note(&mut self, s: impl Into<String>) -> &mut Self {
        self.notes.push(s.into());
        self
    }

    fn finish(
        &mut self,
        status: VertexStatus,
        vertex: impl Into<String>,
        complexity: ComplexityInterval,
    ) -> VertexReport {
        let w = self.block.weight;
        assert!(complexity.hi <= w, "complexity above weight");
        if complexity.hi == w && !complexity.is_exact() {
            self.cite(Citation::ComplexityAtMostWeight);
        }
        VertexReport {
            mu: self.ctx.mu.clone(),
            p: self.ctx.p,
            status,
            vertex: vertex.into(),
            complexity,
            block: self.block.clone(),
            citations: std::mem::take(&mut self.citations),
            notes: std::mem::take(&mut self.notes),
            source: None,
            feasible_types: Vec::new(),
        }
    }
}

fn v1_power(p: Prime, w: usize) -> String {
    SymbolicGroup::ElementaryAbelian { p, rank: w }.to_string()
}

pub fn classify(ctx: &SpechtContext) -> VertexReport {
    let mu = &ctx.mu;
    let p = ctx.p;
    let q = p.get() as usize;
    let block = block_info(mu, p);
    let w = block.weight;
    let mut b = Builder {
        ctx,
        block,
        citations: vec![Citation::BlockDefectGroup],
        notes: ctx.notes.clone(),
    };
    let two_two = q == 2 && mu.parts() == [2, 2];
    let positive = ComplexityInterval::new(w.min(1), w);

    if !two_two {
        match ctx.resolved_indecomposable() {
            Some(true) => {
                if ctx.auto_indecomposable() {
                    b.cite(Citation::SpechtIndecomposable);
                } else {
                    b.note("indecomposability asserted by caller");
                }
            }
            Some(false) => {
                b.note("decomposable: vertices are not defined");
                return b.finish(VertexStatus::NotClassified, "unknown", positive);
            }
            None => {
                if mu.is_core(4) {
                    b.note("4-core but 2-singular");
                } else {
                    b.note("2-singular");
                }
                b.note("indecomposability unknown");
                return b.finish(VertexStatus::NotClassified, "unknown", positive);
            }
        }
    }

    if w == 0 {
        b.cite(Citation::VertexInDefectGroup);
        return b.finish(VertexStatus::ProjectiveTrivialVertex, "1", ComplexityInterval::exact(0));
    }

    if q == 2 && mu.is_p_regular(p) {
        if mu.is_core(4) {
            b.cite(Citation::TwoRegularFourCore)
                .cite(Citation::FourCoreSimpleYoung)
                .cite(Citation::YoungModuleVertex);
            let mut r = b.finish(VertexStatus::ElementaryAbelian, v1_power(p, w), ComplexityInterval::exact(w));
            r.source = Some(SourceNote {
                trivial_source: true,
                simple_young: true,
            });
            r.feasible_types = feasible_abelian_types(mu, p).types();
            return r;
        }
        b.cite(Citation::TwoRegularFourCore).note("not a 4-core");
        return b.finish(VertexStatus::NonAbelian, "non-abelian", positive);
    }

    if q >= 3 {
        if *mu == Partition::rectangle(q, q) {
            b.cite(Citation::RectangleSylowVertex).cite(Citation::RectangleComplexity);
            return b.finish(
                VertexStatus::SylowOfSym,
                format!("Sylow_{q}(S_{})", q * q),
                ComplexityInterval::exact(q - 1),
            );
        }
        if mu.is_pxp(p) {
            b.cite(Citation::PxpNonAbelian).cite(Citation::PxpComplexityBelowWeight);
            return b.finish(VertexStatus::NonAbelian, "non-abelian", ComplexityInterval::new(1, w - 1));
        }
        if w < q {
            b.cite(Citation::AbelianDefectWeight)
                .cite(Citation::AbelianVertexIsV1PowerWeight);
            let mut r = b.finish(VertexStatus::ElementaryAbelian, v1_power(p, w), ComplexityInterval::exact(w));
            r.feasible_types = feasible_abelian_types(mu, p).types();
            return r;
        }
        if let Some(group) = literature_vertex(mu, p) {
            b.cite(Citation::HookVertexLiterature)
                .note(format!("vertex {group}"));
            if group.is_abelian() {
                assert_eq!(group.order_exponent() as usize, w);
                b.cite(Citation::AbelianVertexIsV1PowerWeight)
                    .cite(Citation::AbelianVertexForcesP2Core);
                let mut r = b.finish(VertexStatus::ElementaryAbelian, v1_power(p, w), ComplexityInterval::exact(w));
                r.feasible_types = feasible_abelian_types(mu, p).types();
                return r;
            }
            return b.finish(VertexStatus::NonAbelian, "non-abelian", positive);
        }
        if ctx.known_simple && mu.is_p_regular(p) {
            b.cite(Citation::SimpleRegularP2Core).note("simplicity asserted by caller");
            if slack_exponent(mu, p) == 0 {
                b.cite(Citation::YoungModuleVertex);
                let mut r = b.finish(VertexStatus::ElementaryAbelian, v1_power(p, w), ComplexityInterval::exact(w));
                r.source = Some(SourceNote {
                    trivial_source: true,
                    simple_young: true,
                });
                r.feasible_types = feasible_abelian_types(mu, p).types();
                return r;
            }
            b.note("not a p^2-core");
            return b.finish(VertexStatus::NonAbelian, "non-abelian", positive);
        }
    }

    if two_two {
        b.cite(Citation::TwoTwoKleinFour);
        return b.finish(VertexStatus::KleinFour, "V2(2)", ComplexityInterval::new(1, 2));
    }

    let gate = feasible_abelian_types(mu, p);
    if gate.slack > 0 {
        b.cite(Citation::AbelianVertexForcesP2Core)
            .note(format!("not a p^2-core (slack exponent {})", gate.slack));
        return b.finish(VertexStatus::NonAbelian, "non-abelian", positive);
    }
    b.cite(Citation::AbelianVertexForcesP2Core).cite(Citation::OpenP2CoreQuestion);
    if q == 2 {
        b.cite(Citation::AbelianFactorsZ2OrZ4);
    }
    b.note("p^2-core: an abelian vertex is not excluded");
    let mut r = b.finish(VertexStatus::AbelianFeasibleButUndetermined, "undetermined", positive);
    r.feasible_types = gate.types();
    r
}

/// Complexity interval from [`classify`], sharpened by an asserted abelian vertex.
///
/// With an abelian vertex of rank `m`, the complexity equals `m`; at `p = 2`
/// the factors are `Z_2` or `Z_4`, so `ceil(w/2) <= c <= w`. For odd `p` or
/// 2-regular `mu` the rank is exactly `w`. The assertion is ignored when the
/// classifier has already ruled out an abelian vertex.
pub fn complexity_bounds(ctx: &SpechtContext) -> ComplexityInterval {
    let report = classify(ctx);
    let iv = report.complexity;
    if !ctx.assume_abelian_vertex {
        return iv;
    }
    let w = report.block.weight;
    match report.status {
        VertexStatus::NonAbelian | VertexStatus::SylowOfSym => iv,
        _ if slack_exponent(&ctx.mu, ctx.p) > 0 => iv,
        _ if ctx.auto_indecomposable() => ComplexityInterval::exact(w),
        _ => ComplexityInterval::new(iv.lo.max(w.div_ceil(2)), iv.hi),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn p(x: u64) -> Prime {
        Prime::new(x).unwrap()
    }

    fn run(v: &[usize], q: u64) -> VertexReport {
        classify(&SpechtContext::new(part(v), p(q)))
    }

    #[test]
    fn hook_seven_one_cubed() {
        let ctx = SpechtContext::new(part(&[7, 1, 1, 1]), p(3)).simple(true);
        let r = classify(&ctx);
        assert_eq!(r.status, VertexStatus::ElementaryAbelian);
        assert_eq!(r.vertex, "V1(3)^3");
        assert_eq!(r.complexity, ComplexityInterval::exact(3));
        assert_eq!(r.elementary_abelian_rank(), Some(3));
    }

    #[test]
    fn rectangle() {
        let r = run(&[3, 3, 3], 3);
        assert_eq!(r.status, VertexStatus::SylowOfSym);
        assert_eq!(r.vertex, "Sylow_3(S_9)");
        assert_eq!(r.complexity, ComplexityInterval::exact(2));

        let r = run(&[5, 5, 5, 5, 5], 5);
        assert_eq!(r.vertex, "Sylow_5(S_25)");
        assert_eq!(r.complexity, ComplexityInterval::exact(4));
    }

    #[test]
    fn two_regular_four_cores() {
        let r = run(&[6, 3], 2);
        assert_eq!(r.status, VertexStatus::ElementaryAbelian);
        assert_eq!(r.block.weight, 3);
        assert_eq!(r.vertex, "V1(2)^3");
        assert_eq!(
            r.source,
            Some(SourceNote {
                trivial_source: true,
                simple_young: true
            })
        );

        let r = run(&[4, 1], 2);
        assert_eq!(r.status, VertexStatus::ElementaryAbelian);
        assert_eq!(r.vertex, "V1(2)");
        assert_eq!(r.complexity, ComplexityInterval::exact(1));

        let r = run(&[5, 1], 2);
        assert_eq!(r.status, VertexStatus::NonAbelian);
        assert_eq!(r.complexity, ComplexityInterval::new(1, r.block.weight));
    }

    #[test]
    fn weight_zero() {
        let r = run(&[3, 2, 1], 2);
        assert_eq!(r.status, VertexStatus::ProjectiveTrivialVertex);
        assert_eq!(r.complexity, ComplexityInterval::exact(0));
        assert_eq!(r.elementary_abelian_rank(), Some(0));
    }

    #[test]
    fn klein_four_and_singular() {
        let r = run(&[2, 2], 2);
        assert_eq!(r.status, VertexStatus::KleinFour);
        assert_eq!(r.vertex, "V2(2)");
        assert_eq!(r.complexity, ComplexityInterval::new(1, 2));

        let r = run(&[4, 1, 1], 2);
        assert_eq!(r.status, VertexStatus::NotClassified);
        assert!(r.notes.iter().any(|n| n == "4-core but 2-singular"));

        let r = run(&[2, 1, 1], 2);
        assert_eq!(r.status, VertexStatus::NotClassified);
        assert!(!r.notes.iter().any(|n| n == "4-core but 2-singular"));
    }

    #[test]
    fn asserted_indecomposable_singular() {
        // (4,1,1) is a 4-core: the gate leaves abelian types open
        let ctx = SpechtContext::new(part(&[4, 1, 1]), p(2)).indecomposable(true);
        let r = classify(&ctx);
        assert_eq!(r.status, VertexStatus::AbelianFeasibleButUndetermined);
        assert_eq!(r.feasible_types.len(), 2);
        // (2,2,1,1) has slack 1
        let ctx = SpechtContext::new(part(&[2, 2, 1, 1]), p(2)).indecomposable(true);
        assert_eq!(classify(&ctx).status, VertexStatus::NonAbelian);
        let ctx = SpechtContext::new(part(&[2, 2, 1, 1]), p(2)).indecomposable(false);
        assert_eq!(classify(&ctx).status, VertexStatus::NotClassified);
    }

    #[test]
    fn odd_prime_rules() {
        let r = run(&[6, 6, 6], 3);
        assert_eq!(r.status, VertexStatus::NonAbelian);
        assert_eq!(r.complexity, ComplexityInterval::new(1, r.block.weight - 1));

        let r = run(&[2, 1], 3);
        assert_eq!(r.status, VertexStatus::ElementaryAbelian);
        assert_eq!(r.vertex, "V1(3)");

        // (6,3) at p = 3 is a 3-regular 9-core of weight 3
        let r = run(&[6, 3], 3);
        assert_eq!(r.status, VertexStatus::AbelianFeasibleButUndetermined);
        assert_eq!(r.feasible_types[0].exponents(), &[1, 1, 1]);
        let ctx = SpechtContext::new(part(&[6, 3]), p(3)).simple(true);
        assert_eq!(classify(&ctx).status, VertexStatus::ElementaryAbelian);

        // (9) at p = 3 has a hook of length 9
        let r = run(&[9], 3);
        assert_eq!(r.status, VertexStatus::NonAbelian);
    }

    #[test]
    fn complexity_bound_examples() {
        let ctx = SpechtContext::new(part(&[7, 1, 1, 1]), p(3));
        assert_eq!(complexity_bounds(&ctx.clone().simple(true)), ComplexityInterval::exact(3));
        assert_eq!(
            complexity_bounds(&SpechtContext::new(part(&[3, 2, 1]), p(2))),
            ComplexityInterval::exact(0)
        );
        assert_eq!(
            complexity_bounds(&SpechtContext::new(part(&[3, 3, 3]), p(3))),
            ComplexityInterval::exact(2)
        );
        // (4,1,1): weight 3, abelian vertex forces ceil(3/2) = 2 <= c
        let ctx = SpechtContext::new(part(&[4, 1, 1]), p(2))
            .indecomposable(true)
            .abelian_vertex(true);
        assert_eq!(complexity_bounds(&ctx), ComplexityInterval::new(2, 3));
        // assumption ignored when already non-abelian
        let ctx = SpechtContext::new(part(&[9]), p(3)).abelian_vertex(true);
        assert_eq!(complexity_bounds(&ctx), ComplexityInterval::new(1, 3));
    }

    #[test]
    fn json_layout() {
        let r = run(&[2, 2], 2);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(
            v,
            json!({
                "mu": [2, 2],
                "p": 2,
                "status": "KleinFour",
                "vertex": "V2(2)",
                "complexity": {"lo": 1, "hi": 2},
                "block": {"core": [], "weight": 2, "defect_group": "Sylow_2(S_4)", "abelian_defect": false},
                "citations": ["block-defect-group", "two-two-klein-four", "complexity-at-most-weight"],
                "notes": []
            })
        );
        assert!(r.to_json().starts_with("{\"mu\":[2,2],\"p\":2,\"status\":"));
    }
}
