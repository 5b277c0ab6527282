//! Weighted colimits over finite sets, the canonical presentation of a
//! presheaf as a colimit of representables, and the `Ext`/`Res` pair between
//! diagrams `A → B` and colimit-preserving functors out of presheaves.
//!
//! A colimit-preserving functor is only ever represented as `Ext(F)` for a
//! diagram `F`; its value on a weight `W` is `colim_W(F)`, computed as the
//! coequalizer of two maps `⊔_{x,y} act(W(y) ⊗ hom(x, y), F(x)) ⇉ ⊔_x act(W(x), F(x))`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::category::{Category, Cocomplete, Enriched, LeftModule, Monoidal};
use crate::enriched::SetEnriched;
use crate::finset::{FinSets, SetError, SkMap, SkSet};
use crate::mfunctor::{check_mfun_mor, MFunET, MFunMor};
use crate::presheaf::{representable, tensor_presheaf, tensor_presheaf_mor, yoneda, yoneda_structure, Presheaf, PresheafMor, Presheaves};
use crate::Limits;

pub type Weight = Presheaf<SkSet, SkMap>;
pub type WeightMor = PresheafMor<SkSet, SkMap>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ColimError {
    #[error("size bound exceeded: {what} is {size}, cap {cap}")]
    SizeBound { what: &'static str, size: u64, cap: u64 },
    #[error("legs do not form a cocone at ({x}, {y})")]
    NotACocone { x: String, y: String },
    #[error("no mediating morphism exists")]
    NoMediator,
    #[error("weight and diagram disagree on the number of objects")]
    Shape,
}

/// Apex and legs `act(W(x), F(x)) → apex`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WCocone<O, F> {
    pub apex: O,
    pub legs: Vec<F>,
}

/// A weighted colimit with the coproduct-and-coequalizer presentation that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WColimit<O, F> {
    pub cocone: WCocone<O, F>,
    /// `⊔_x act(W(x), F(x))` and its injections.
    pub summands: O,
    pub injections: Vec<F>,
    /// The parallel pair into `summands`, from the weight side and from the diagram side.
    pub w_side: F,
    pub f_side: F,
    /// The coequalizer projection `summands → apex`.
    pub proj: F,
}

fn check_size<B: Cocomplete>(b: &B, x: &B::Ob, limits: &Limits, what: &'static str) -> Result<(), ColimError> {
    let size = b.size(x);
    if size > limits.max_card {
        return Err(ColimError::SizeBound {
            what,
            size: size as u64,
            cap: limits.max_card as u64,
        });
    }
    Ok(())
}

/// `colim_W(F)` as a coequalizer of coproducts.
pub fn weighted_colimit<A, B>(
    a: &A,
    b: &B,
    w: &Weight,
    f: &MFunET<B::Ob, B::Mor>,
    limits: &Limits,
) -> Result<WColimit<B::Ob, B::Mor>, ColimError>
where
    A: Enriched<Base = FinSets>,
    B: LeftModule<Base = FinSets> + Cocomplete,
{
    let n = a.object_count();
    if w.values.len() != n || f.ob_map.len() != n {
        return Err(ColimError::Shape);
    }
    let m = FinSets;
    let mut src_parts = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let ob = b.act_ob(&m.tensor_ob(&w.values[y], &a.hom(x, y)), &f.ob_map[x]);
            check_size(b, &ob, limits, "relation summand")?;
            src_parts.push(ob);
        }
    }
    let tgt_parts: Vec<B::Ob> = (0..n).map(|x| b.act_ob(&w.values[x], &f.ob_map[x])).collect();
    for p in &tgt_parts {
        check_size(b, p, limits, "colimit summand")?;
    }
    let (summands, injections) = b.coproduct(&tgt_parts);
    check_size(b, &summands, limits, "coproduct of summands")?;
    let (relations, _) = b.coproduct(&src_parts);
    check_size(b, &relations, limits, "coproduct of relations")?;
    let mut w_legs = Vec::with_capacity(n * n);
    let mut f_legs = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            w_legs.push(b.then(&injections[x], &b.act_mor(w.action(x, y), &b.identity(&f.ob_map[x]))));
            f_legs.push(b.then(&injections[y], &b.act_mor(&m.identity(&w.values[y]), f.phi(n, x, y))));
        }
    }
    let w_side = b.copair(&summands, &w_legs);
    let f_side = b.copair(&summands, &f_legs);
    let (apex, proj) = b.coequalizer(&w_side, &f_side);
    let legs = injections.iter().map(|i| b.then(&proj, i)).collect();
    Ok(WColimit {
        cocone: WCocone { apex, legs },
        summands,
        injections,
        w_side,
        f_side,
        proj,
    })
}

/// Checks the cocone squares `leg_x ∘ act(W.action(x, y), id) = leg_y ∘ act(id, φ(x, y))`.
pub fn is_cocone<A, B>(a: &A, b: &B, w: &Weight, f: &MFunET<B::Ob, B::Mor>, c: &WCocone<B::Ob, B::Mor>) -> Result<(), ColimError>
where
    A: Enriched<Base = FinSets>,
    B: LeftModule<Base = FinSets> + Cocomplete,
{
    let n = a.object_count();
    let names = a.object_names();
    if c.legs.len() != n {
        return Err(ColimError::Shape);
    }
    for x in 0..n {
        if !b.is_hom(&c.legs[x], &b.act_ob(&w.values[x], &f.ob_map[x]), &c.apex) {
            return Err(ColimError::Shape);
        }
    }
    for x in 0..n {
        for y in 0..n {
            let lhs = b.then(&c.legs[x], &b.act_mor(w.action(x, y), &b.identity(&f.ob_map[x])));
            let rhs = b.then(&c.legs[y], &b.act_mor(&FinSets.identity(&w.values[y]), f.phi(n, x, y)));
            if lhs != rhs {
                return Err(ColimError::NotACocone {
                    x: names[x].clone(),
                    y: names[y].clone(),
                });
            }
        }
    }
    Ok(())
}

/// The morphism `apex → probe.apex` commuting with all legs, computed from canonical representatives.
pub fn mediator<B: Cocomplete>(b: &B, wc: &WColimit<B::Ob, B::Mor>, probe: &WCocone<B::Ob, B::Mor>) -> Option<B::Mor> {
    let h = b.copair(&probe.apex, &probe.legs);
    let u = b.descend(&wc.proj, &h)?;
    wc.cocone
        .legs
        .iter()
        .zip(&probe.legs)
        .all(|(l, p)| b.compose(&u, l).as_ref() == Some(p))
        .then_some(u)
}

/// Outcome of [`check_universal`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UniversalReport {
    pub probes: usize,
    pub jointly_surjective: bool,
    pub failures: Vec<String>,
}

/// Every probe must be a cocone with exactly one mediator; the legs must be jointly surjective.
pub fn check_universal<A, B>(
    a: &A,
    b: &B,
    w: &Weight,
    f: &MFunET<B::Ob, B::Mor>,
    wc: &WColimit<B::Ob, B::Mor>,
    probes: &[(WCocone<B::Ob, B::Mor>, Option<B::Mor>)],
) -> UniversalReport
where
    A: Enriched<Base = FinSets>,
    B: LeftModule<Base = FinSets> + Cocomplete,
{
    let mut report = UniversalReport {
        probes: probes.len(),
        jointly_surjective: b.jointly_surjective(&wc.cocone.legs, &wc.cocone.apex),
        failures: Vec::new(),
    };
    if !report.jointly_surjective {
        report.failures.push("legs are not jointly surjective".into());
    }
    if let Err(e) = is_cocone(a, b, w, f, &wc.cocone) {
        report.failures.push(format!("colimit cocone: {e}"));
    }
    for (i, (probe, expected)) in probes.iter().enumerate() {
        if let Err(e) = is_cocone(a, b, w, f, probe) {
            report.failures.push(format!("probe {i}: {e}"));
            continue;
        }
        match mediator(b, wc, probe) {
            None => report.failures.push(format!("probe {i}: no mediator")),
            Some(u) => {
                if let Some(e) = expected {
                    if u != *e {
                        report.failures.push(format!("probe {i}: mediator differs from the expected map"));
                    }
                }
            }
        }
    }
    report
}

/// `g ∘ legs` for a map `g` out of the apex.
pub fn post_compose<B: Category>(b: &B, c: &WCocone<B::Ob, B::Mor>, g: &B::Mor) -> WCocone<B::Ob, B::Mor> {
    WCocone {
        apex: b.cod(g),
        legs: c.legs.iter().map(|l| b.then(g, l)).collect(),
    }
}

/// The isomorphism `colim_F(Y) → F` in presheaves, or `None` if the comparison is not invertible.
pub fn canonical_presentation<A>(a: &A, f: &Weight, limits: &Limits) -> Result<CanonicalPresentation, ColimError>
where
    A: Enriched<Base = FinSets>,
{
    let p = Presheaves::new(a);
    let y = yoneda(a);
    let n = a.object_count();
    let wc = weighted_colimit(a, &p, f, &y, limits)?;
    let legs = (0..n)
        .map(|x| PresheafMor {
            dom: tensor_presheaf(&FinSets, &f.values[x], &representable(a, x)),
            cod: f.clone(),
            components: (0..n).map(|w| f.action(w, x).clone()).collect(),
        })
        .collect();
    let probe = WCocone { apex: f.clone(), legs };
    is_cocone(a, &p, f, &y, &probe)?;
    let comparison = mediator(&p, &wc, &probe).ok_or(ColimError::NoMediator)?;
    let inverse = p.invert(&comparison);
    Ok(CanonicalPresentation {
        colimit: wc.cocone.apex,
        comparison,
        inverse,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalPresentation {
    /// `colim_F(Y)`, computed pointwise.
    pub colimit: Weight,
    /// The mediator into `F` induced by the action maps of `F`.
    pub comparison: WeightMor,
    pub inverse: Option<WeightMor>,
}

/// The colimit-preserving functor out of presheaves determined by a diagram `F: A → B`.
pub struct Ext<'a, A, B: Category> {
    a: &'a A,
    b: &'a B,
    diagram: MFunET<B::Ob, B::Mor>,
    limits: Limits,
}

impl<'a, A, B> Ext<'a, A, B>
where
    A: Enriched<Base = FinSets>,
    B: LeftModule<Base = FinSets> + Cocomplete,
{
    pub fn new(a: &'a A, b: &'a B, diagram: MFunET<B::Ob, B::Mor>, limits: Limits) -> Self {
        Ext { a, b, diagram, limits }
    }

    pub fn diagram(&self) -> &MFunET<B::Ob, B::Mor> {
        &self.diagram
    }

    pub fn apply(&self, w: &Weight) -> Result<WColimit<B::Ob, B::Mor>, ColimError> {
        weighted_colimit(self.a, self.b, w, &self.diagram, &self.limits)
    }

    /// The mediator `Ext(F)(W) → Ext(F)(W')` induced by `α: W → W'`.
    pub fn apply_mor(&self, alpha: &WeightMor) -> Result<B::Mor, ColimError> {
        let src = self.apply(&alpha.dom)?;
        let tgt = self.apply(&alpha.cod)?;
        self.apply_mor_between(alpha, &src, &tgt)
    }

    pub fn apply_mor_between(
        &self,
        alpha: &WeightMor,
        src: &WColimit<B::Ob, B::Mor>,
        tgt: &WColimit<B::Ob, B::Mor>,
    ) -> Result<B::Mor, ColimError> {
        let b = self.b;
        let probe = WCocone {
            apex: tgt.cocone.apex.clone(),
            legs: (0..self.a.object_count())
                .map(|x| {
                    b.then(
                        &tgt.cocone.legs[x],
                        &b.act_mor(&alpha.components[x], &b.identity(&self.diagram.ob_map[x])),
                    )
                })
                .collect(),
        };
        mediator(b, src, &probe).ok_or(ColimError::NoMediator)
    }

    /// The comparison `Ext(F)(m ⊗ W) → act(m, Ext(F)(W))` with legs `act(id_m, leg_x)`.
    pub fn tensor_comparison(&self, m: &SkSet, w: &Weight) -> Result<(B::Mor, Option<B::Mor>), ColimError> {
        let b = self.b;
        let plain = self.apply(w)?;
        let tensored = self.apply(&tensor_presheaf(&FinSets, m, w))?;
        let id_m = FinSets.identity(m);
        let probe = WCocone {
            apex: b.act_ob(m, &plain.cocone.apex),
            legs: plain.cocone.legs.iter().map(|l| b.act_mor(&id_m, l)).collect(),
        };
        let u = mediator(b, &tensored, &probe).ok_or(ColimError::NoMediator)?;
        let inv = b.invert(&u);
        Ok((u, inv))
    }

    /// The mediator `Ext(F)(Y(x)) → F(x)` out of the co-Yoneda colimit, with legs `φ(w, x)`.
    pub fn coyoneda(&self, x: usize) -> Result<(B::Mor, Option<B::Mor>), ColimError> {
        let n = self.a.object_count();
        let wc = self.apply(&representable(self.a, x))?;
        let probe = WCocone {
            apex: self.diagram.ob_map[x].clone(),
            legs: (0..n).map(|w| self.diagram.phi(n, w, x).clone()).collect(),
        };
        let u = mediator(self.b, &wc, &probe).ok_or(ColimError::NoMediator)?;
        let inv = self.b.invert(&u);
        Ok((u, inv))
    }
}

/// `Res(G)`: objects `G(Y(x))`, action maps `G(ψ(x, y)) ∘ comparison⁻¹`.
pub fn res<A, B>(g: &Ext<'_, A, B>) -> Result<MFunET<B::Ob, B::Mor>, ColimError>
where
    A: Enriched<Base = FinSets>,
    B: LeftModule<Base = FinSets> + Cocomplete,
{
    let a = g.a;
    let b = g.b;
    let n = a.object_count();
    let images: Vec<_> = (0..n).map(|x| g.apply(&representable(a, x))).collect::<Result<_, _>>()?;
    let mut phi = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let psi = yoneda_structure(a, x, y);
            let src = g.apply(&psi.dom)?;
            let ext_psi = g.apply_mor_between(&psi, &src, &images[y])?;
            let (_, inv) = g.tensor_comparison(&a.hom(x, y), &representable(a, x))?;
            let inv = inv.ok_or(ColimError::NoMediator)?;
            phi.push(b.then(&ext_psi, &inv));
        }
    }
    Ok(MFunET {
        ob_map: images.into_iter().map(|wc| wc.cocone.apex).collect(),
        phi,
    })
}

/// `colim_W(F) → colim_W(G)` induced by a morphism of diagrams `c: F ⇒ G`.
pub fn colim_diagram_map<A, B>(
    a: &A,
    b: &B,
    w: &Weight,
    from: &WColimit<B::Ob, B::Mor>,
    to: &WColimit<B::Ob, B::Mor>,
    c: &MFunMor<B::Mor>,
) -> Result<B::Mor, ColimError>
where
    A: Enriched<Base = FinSets>,
    B: LeftModule<Base = FinSets> + Cocomplete,
{
    let probe = WCocone {
        apex: to.cocone.apex.clone(),
        legs: (0..a.object_count())
            .map(|x| b.then(&to.cocone.legs[x], &b.act_mor(&FinSets.identity(&w.values[x]), &c.components[x])))
            .collect(),
    };
    mediator(b, from, &probe).ok_or(ColimError::NoMediator)
}

/// The diagram `A → FinSets` of a Set-valued functor given by one table per morphism of the underlying category.
pub fn set_diagram(a: &SetEnriched, values: &[usize], maps: &[SkMap]) -> Result<MFunET<SkSet, SkMap>, SetError> {
    let c = a.category();
    let n = c.object_count();
    let mut phi = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            // hom(x, y) ⊗ F(x), element (k, i) at k·|F(x)| + i
            let table = c.hom(x, y).iter().flat_map(|&u| maps[u].table().iter().copied()).collect();
            phi.push(SkMap::new(values[y], table)?);
        }
    }
    Ok(MFunET {
        ob_map: values.iter().map(|&v| SkSet(v)).collect(),
        phi,
    })
}

/// The weight of a contravariant Set-valued functor, `maps[f]: W(cod f) → W(dom f)`.
pub fn set_weight(a: &SetEnriched, values: &[usize], maps: &[SkMap]) -> Result<Weight, SetError> {
    let c = a.category();
    let n = c.object_count();
    let mut action = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let hom = c.hom(x, y);
            // W(y) ⊗ hom(x, y), element (i, k) at i·|hom| + k
            let table = (0..values[y]).flat_map(|i| hom.iter().map(move |&u| maps[u].apply(i))).collect();
            action.push(SkMap::new(values[x], table)?);
        }
    }
    Ok(Presheaf {
        values: values.iter().map(|&v| SkSet(v)).collect(),
        action,
    })
}

/// `Y(g): Y(x) → Y(y)` for an element `g` of `hom(x, y)`.
pub fn yoneda_element<A: Enriched<Base = FinSets>>(a: &A, x: usize, y: usize, g: usize) -> WeightMor {
    let psi = yoneda_structure(a, x, y);
    let point = SkMap::element(a.hom(x, y).0, g);
    let lift = tensor_presheaf_mor(&FinSets, &point, &Presheaves::new(a).identity(&representable(a, x)));
    Presheaves::new(a).then(&psi, &lift)
}

/// Results of [`check_equivalence`], by part.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// Objects at which `F ⇒ Res(Ext(F))` was shown invertible.
    pub unit_components: usize,
    pub weights: usize,
    pub naturality_squares: usize,
    pub coproducts: usize,
    pub coequalizers: usize,
    pub failures: Vec<String>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Sample weights: representables, binary coproducts of representables, quotients
/// `coeq(Y(g1), Y(g2))` for parallel elements, and `extra`. Sample maps between them are returned alongside.
pub fn sample_weights<A: Enriched<Base = FinSets>>(
    a: &A,
    extra: &[Weight],
) -> (Vec<Weight>, Vec<WeightMor>, Vec<(usize, usize)>, Vec<(WeightMor, WeightMor)>) {
    let p = Presheaves::new(a);
    let n = a.object_count();
    let mut weights: Vec<Weight> = (0..n).map(|x| representable(a, x)).collect();
    let mut maps = Vec::new();
    let mut sums = Vec::new();
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let h = a.hom(x, y).0;
            for g in 0..h {
                maps.push(yoneda_element(a, x, y, g));
            }
            for g1 in 0..h {
                for g2 in g1 + 1..h {
                    let (e1, e2) = (yoneda_element(a, x, y, g1), yoneda_element(a, x, y, g2));
                    let (q, proj) = p.coequalizer(&e1, &e2);
                    weights.push(q);
                    maps.push(proj);
                    pairs.push((e1, e2));
                }
            }
            if x <= y {
                let (sum, inj) = p.coproduct(&[representable(a, x), representable(a, y)]);
                weights.push(sum);
                maps.extend(inj);
                sums.push((x, y));
            }
        }
    }
    weights.extend(extra.iter().cloned());
    (weights, maps, sums, pairs)
}

/// (i) `F ≅ Res(Ext(F))` by an invertible morphism of diagrams; (ii) `Ext(Res(Ext(F)))(W) ≅ Ext(F)(W)`
/// naturally in the sampled weights; (iii) `Ext(F)` preserves the sampled coproducts and coequalizers.
pub fn check_equivalence<A, B>(
    a: &A,
    b: &B,
    f: &MFunET<B::Ob, B::Mor>,
    extra: &[Weight],
    limits: &Limits,
) -> Result<EquivalenceReport, ColimError>
where
    A: Enriched<Base = FinSets>,
    B: LeftModule<Base = FinSets> + Cocomplete,
{
    let n = a.object_count();
    let names = a.object_names();
    let mut report = EquivalenceReport::default();
    let ext = Ext::new(a, b, f.clone(), *limits);
    let g = res(&ext)?;

    // (i) c_x = leg_x ∘ act(unit(x), id): F(x) → Ext(F)(Y(x))
    let mut unit = Vec::with_capacity(n);
    for x in 0..n {
        let wc = ext.apply(&representable(a, x))?;
        let c = b.then(&wc.cocone.legs[x], &b.act_mor(&a.unit(x), &b.identity(&f.ob_map[x])));
        if b.invert(&c).is_some() {
            report.unit_components += 1;
        } else {
            report.failures.push(format!("unit component at {} is not invertible", names[x]));
        }
        unit.push(c);
    }
    let unit = MFunMor { components: unit };
    if let Err(e) = check_mfun_mor(a, b, f, &g, &unit) {
        report.failures.push(format!("F ⇒ Res(Ext(F)) is not a morphism: {e}"));
    }
    if let Err(e) = crate::mfunctor::validate_mfun_et(a, b, &g) {
        report.failures.push(format!("Res(Ext(F)) is invalid: {e}"));
    }

    // (ii)
    let round = Ext::new(a, b, g.clone(), *limits);
    let (weights, maps, sums, pairs) = sample_weights(a, extra);
    let mut kappa = Vec::with_capacity(weights.len());
    for (i, w) in weights.iter().enumerate() {
        report.weights += 1;
        let from = ext.apply(w)?;
        let to = round.apply(w)?;
        let k = colim_diagram_map(a, b, w, &from, &to, &unit)?;
        if b.invert(&k).is_none() {
            report.failures.push(format!("weight {i}: comparison is not invertible"));
        }
        kappa.push((w.clone(), from, to, k));
    }
    let lookup = |w: &Weight| kappa.iter().find(|(v, ..)| v == w);
    for (j, alpha) in maps.iter().enumerate() {
        let (Some((_, fs, rs, ks)), Some((_, ft, rt, kt))) = (lookup(&alpha.dom), lookup(&alpha.cod)) else {
            continue;
        };
        report.naturality_squares += 1;
        let lhs = b.then(&round.apply_mor_between(alpha, rs, rt)?, ks);
        let rhs = b.then(kt, &ext.apply_mor_between(alpha, fs, ft)?);
        if lhs != rhs {
            report.failures.push(format!("map {j}: comparison is not natural"));
        }
    }

    // (iii)
    let p = Presheaves::new(a);
    for &(x, y) in &sums {
        report.coproducts += 1;
        let parts = [representable(a, x), representable(a, y)];
        let (sum, inj) = p.coproduct(&parts);
        let whole = ext.apply(&sum)?;
        let mut images = Vec::new();
        let mut legs = Vec::new();
        for (part, i) in parts.iter().zip(&inj) {
            let wc = ext.apply(part)?;
            legs.push(ext.apply_mor_between(i, &wc, &whole)?);
            images.push(wc.cocone.apex);
        }
        let (_, _) = b.coproduct(&images);
        let cmp = b.copair(&whole.cocone.apex, &legs);
        if b.invert(&cmp).is_none() {
            report
                .failures
                .push(format!("coproduct Y({}) ⊔ Y({}) is not preserved", names[x], names[y]));
        }
    }
    for (j, (e1, e2)) in pairs.iter().enumerate() {
        report.coequalizers += 1;
        let (q, proj) = p.coequalizer(e1, e2);
        let src = ext.apply(&e1.dom)?;
        let tgt = ext.apply(&e1.cod)?;
        let quot = ext.apply(&q)?;
        let m1 = ext.apply_mor_between(e1, &src, &tgt)?;
        let m2 = ext.apply_mor_between(e2, &src, &tgt)?;
        let (_, qproj) = b.coequalizer(&m1, &m2);
        let ext_proj = ext.apply_mor_between(&proj, &tgt, &quot)?;
        match b.descend(&qproj, &ext_proj) {
            Some(cmp) if b.invert(&cmp).is_some() => {}
            _ => report.failures.push(format!("coequalizer {j} is not preserved")),
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::maps_between;
    use crate::instances;
    use crate::mfunctor::validate_mfun_et;
    use crate::presheaf::{audit_presheaf, check_presheaf_mor};
    use alloc::vec;

    fn lim() -> Limits {
        Limits::default()
    }

    fn tables(a: &SetEnriched, values: &[usize], maps: &[Vec<usize>]) -> MFunET<SkSet, SkMap> {
        let c = a.category();
        let maps: Vec<SkMap> = maps
            .iter()
            .enumerate()
            .map(|(f, t)| SkMap::new(values[c.target(f)], t.clone()).unwrap())
            .collect();
        set_diagram(a, values, &maps).unwrap()
    }

    fn terminal_weight(a: &SetEnriched) -> Weight {
        let n = a.object_count();
        Presheaf {
            values: vec![SkSet(1); n],
            action: (0..n * n).map(|i| SkMap::new(1, vec![0; a.hom(i / n, i % n).0]).unwrap()).collect(),
        }
    }

    #[test]
    fn one_object_trivial_hom_gives_the_product() {
        let a = SetEnriched::new(crate::fincat::FinCat::terminal());
        let f = tables(&a, &[3], &[vec![0, 1, 2]]);
        let w = Presheaf {
            values: vec![SkSet(2)],
            action: vec![SkMap::identity(2)],
        };
        let wc = weighted_colimit(&a, &FinSets, &w, &f, &lim()).unwrap();
        assert_eq!(wc.cocone.apex, SkSet(6));
        assert_eq!(wc.w_side, wc.f_side);
    }

    #[test]
    fn parallel_pair_with_swap_has_one_element() {
        let a = SetEnriched::new(instances::parallel_pair());
        let c = a.category();
        let (u, v) = (c.morphism_index("u").unwrap(), c.morphism_index("v").unwrap());
        let mut maps = vec![Vec::new(); c.morphism_count()];
        for f in 0..c.morphism_count() {
            maps[f] = vec![0, 1];
        }
        maps[u] = vec![0, 1];
        maps[v] = vec![1, 0];
        let f = tables(&a, &[2, 2], &maps);
        validate_mfun_et(&a, &FinSets, &f).unwrap();
        let w = terminal_weight(&a);
        assert!(audit_presheaf(&a, &w).is_empty());
        let wc = weighted_colimit(&a, &FinSets, &w, &f, &lim()).unwrap();
        assert_eq!(wc.cocone.apex, SkSet(1));
        // oracle: connected components of the graph on F(p) ⊔ F(q) with edges i ~ u(i) and i ~ v(i)
        let mut comp: Vec<usize> = (0..4).collect();
        let edges = [(0, 2), (1, 3), (0, 3), (1, 2)];
        for _ in 0..4 {
            for &(s, t) in &edges {
                let m = comp[s].min(comp[t]);
                comp[s] = m;
                comp[t] = m;
            }
        }
        let mut roots = comp.clone();
        roots.sort();
        roots.dedup();
        assert_eq!(roots.len(), 1);
        let ext = Ext::new(&a, &FinSets, f, lim());
        assert_eq!(ext.apply(&w).unwrap().cocone.apex, SkSet(1));
    }

    fn arrow_diagram(values: (usize, usize), map: Vec<usize>) -> (SetEnriched, MFunET<SkSet, SkMap>) {
        let a = SetEnriched::new(instances::walking_arrow());
        let c = a.category();
        let mut maps = vec![Vec::new(); c.morphism_count()];
        for f in 0..c.morphism_count() {
            let n = if c.source(f) == 0 { values.0 } else { values.1 };
            maps[f] = (0..n).collect();
        }
        maps[c.morphism_index("u").unwrap()] = map;
        let f = tables(&a, &[values.0, values.1], &maps);
        (a, f)
    }

    #[test]
    fn coyoneda_on_the_arrow() {
        let (a, f) = arrow_diagram((2, 3), vec![2, 0]);
        validate_mfun_et(&a, &FinSets, &f).unwrap();
        let ext = Ext::new(&a, &FinSets, f.clone(), lim());
        for x in 0..2 {
            let wc = ext.apply(&representable(&a, x)).unwrap();
            assert_eq!(wc.cocone.apex, f.ob_map[x]);
            let (_, inv) = ext.coyoneda(x).unwrap();
            assert!(inv.is_some());
            for m in 0..3 {
                let (_, inv) = ext.tensor_comparison(&SkSet(m), &representable(&a, x)).unwrap();
                assert!(inv.is_some());
            }
        }
    }

    #[test]
    fn universality_against_every_small_probe() {
        let (a, f) = arrow_diagram((2, 3), vec![1, 1]);
        let w = terminal_weight(&a);
        let wc = weighted_colimit(&a, &FinSets, &w, &f, &lim()).unwrap();
        let z = wc.cocone.apex.0;
        let mut probes = vec![(wc.cocone.clone(), Some(SkMap::identity(z)))];
        for t in 0..=3 {
            for g in maps_between(z, t) {
                probes.push((post_compose(&FinSets, &wc.cocone, &g), Some(g)));
            }
        }
        let r = check_universal(&a, &FinSets, &w, &f, &wc, &probes);
        assert!(r.failures.is_empty(), "{:?}", r.failures);
        assert!(r.jointly_surjective);
        assert!(r.probes > 20);
    }

    #[test]
    fn ext_is_functorial_on_sampled_maps() {
        let (a, f) = arrow_diagram((2, 3), vec![2, 0]);
        let ext = Ext::new(&a, &FinSets, f, lim());
        let p = Presheaves::new(&a);
        let (_, maps, _, _) = sample_weights(&a, &[]);
        for alpha in &maps {
            let id = p.identity(&alpha.dom);
            let e = ext.apply_mor(&id).unwrap();
            assert_eq!(e, SkMap::identity(ext.apply(&alpha.dom).unwrap().cocone.apex.0));
            for beta in &maps {
                if let Some(comp) = p.compose(beta, alpha) {
                    let lhs = ext.apply_mor(&comp).unwrap();
                    let rhs = ext.apply_mor(beta).unwrap().after(&ext.apply_mor(alpha).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn canonical_presentation_on_the_arrow() {
        let a = SetEnriched::new(instances::walking_arrow());
        let yb = representable(&a, 1);
        let cp = canonical_presentation(&a, &yb, &lim()).unwrap();
        assert_eq!(cp.colimit.values, vec![SkSet(1), SkSet(1)]);
        assert!(cp.inverse.is_some());
        check_presheaf_mor(&a, &cp.comparison).unwrap();
        let t = terminal_weight(&a);
        assert!(canonical_presentation(&a, &t, &lim()).unwrap().inverse.is_some());
    }

    #[test]
    fn equivalence_on_the_arrow() {
        let (a, f) = arrow_diagram((2, 3), vec![2, 0]);
        let extra = [terminal_weight(&a)];
        let r = check_equivalence(&a, &FinSets, &f, &extra, &lim()).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.unit_components, 2);
        assert!(r.coproducts > 0 && r.naturality_squares > 0);
    }

    #[test]
    fn equivalence_on_the_parallel_pair() {
        let a = SetEnriched::new(instances::parallel_pair());
        let c = a.category();
        let mut maps = vec![vec![0, 1]; c.morphism_count()];
        maps[c.morphism_index("v").unwrap()] = vec![1, 0];
        let f = tables(&a, &[2, 2], &maps);
        let r = check_equivalence(&a, &FinSets, &f, &[terminal_weight(&a)], &lim()).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.coequalizers > 0);
    }

    #[test]
    fn res_of_ext_of_yoneda_is_yoneda() {
        let a = SetEnriched::new(instances::walking_arrow());
        let p = Presheaves::new(&a);
        let y = yoneda(&a);
        let ext = Ext::new(&a, &p, y.clone(), lim());
        let g = res(&ext).unwrap();
        validate_mfun_et(&a, &p, &g).unwrap();
        for x in 0..2 {
            let (_, inv) = ext.coyoneda(x).unwrap();
            assert!(inv.is_some());
            assert_eq!(
                g.ob_map[x].values.iter().map(|v| v.0).collect::<Vec<_>>(),
                y.ob_map[x].values.iter().map(|v| v.0).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn empty_source_gives_empty_res() {
        let a = SetEnriched::new(crate::fincat::FinCat::discrete(&[]));
        let f = MFunET {
            ob_map: Vec::new(),
            phi: Vec::new(),
        };
        let ext = Ext::new(&a, &FinSets, f, lim());
        let g = res(&ext).unwrap();
        assert!(g.ob_map.is_empty() && g.phi.is_empty());
    }
}
