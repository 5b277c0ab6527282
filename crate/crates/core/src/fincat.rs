//! Explicit finite categories, functors between them and natural isomorphisms.
//!
//! Identifiers are strings at the boundary and dense indices inside. The
//! composition table is stored dense and fully checked when a [`FinCat`] is
//! built, so holders of a `FinCat` never re-check the category laws.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::category::{Category, Finite};
use crate::Limits;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatError {
    #[error("reference to undeclared identifier `{0}`")]
    DanglingReference(String),
    #[error("identifier `{0}` declared twice")]
    DuplicateName(String),
    #[error("composite {g}∘{f} is missing from the table")]
    MissingComposite { g: String, f: String },
    #[error("composite entry {g}∘{f} = {h} is ill-typed")]
    CompositeTypeMismatch { g: String, f: String, h: String },
    #[error("composite {g}∘{f} declared with two different values")]
    ConflictingComposite { g: String, f: String },
    #[error("unit law fails at morphism `{0}`")]
    UnitViolation(String),
    #[error("associativity fails at ({h}, {g}, {f})")]
    AssociativityViolation { h: String, g: String, f: String },
    #[error("size bound exceeded: {what} is {size}, cap {cap}")]
    SizeBound { what: &'static str, size: u64, cap: u64 },
}

/// A morphism declaration: name, domain, codomain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawMorphism {
    pub name: String,
    pub dom: String,
    pub cod: String,
}

/// Name-level description of a finite category.
///
/// Identities may be omitted: for an object `x` the morphism named `id_x` is
/// used if it is declared as an endomorphism of `x`, and otherwise added.
/// Composites with identities may be omitted too and are filled by the unit
/// law; declared ones are checked against it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawCat {
    pub objects: Vec<String>,
    pub morphisms: Vec<RawMorphism>,
    /// Explicit `(object, identity morphism)` pairs.
    pub identities: Vec<(String, String)>,
    /// `(g, f, g∘f)` entries.
    pub compose: Vec<(String, String, String)>,
}

impl RawCat {
    pub fn new(objects: &[&str]) -> Self {
        RawCat {
            objects: objects.iter().map(|s| s.to_string()).collect(),
            ..Default::default()
        }
    }

    pub fn morphism(mut self, name: &str, dom: &str, cod: &str) -> Self {
        self.morphisms.push(RawMorphism {
            name: name.into(),
            dom: dom.into(),
            cod: cod.into(),
        });
        self
    }

    pub fn composite(mut self, g: &str, f: &str, h: &str) -> Self {
        self.compose.push((g.into(), f.into(), h.into()));
        self
    }
}

/// A validated finite category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCat {
    objects: Vec<String>,
    mor_names: Vec<String>,
    dom: Vec<usize>,
    cod: Vec<usize>,
    identity: Vec<usize>,
    table: Vec<u32>,
    homs: Vec<Vec<usize>>,
    hom_pos: Vec<usize>,
}

pub fn validate_fincat(raw: &RawCat) -> Result<FinCat, CatError> {
    validate_fincat_with(raw, &Limits::default())
}

pub fn validate_fincat_with(raw: &RawCat, limits: &Limits) -> Result<FinCat, CatError> {
    let objects = raw.objects.clone();
    if objects.len() > limits.max_objects {
        return Err(CatError::SizeBound {
            what: "object count",
            size: objects.len() as u64,
            cap: limits.max_objects as u64,
        });
    }
    let mut ob_index = BTreeMap::new();
    for (i, x) in objects.iter().enumerate() {
        if ob_index.insert(x.as_str(), i).is_some() {
            return Err(CatError::DuplicateName(x.clone()));
        }
    }
    let resolve_ob = |name: &str| {
        ob_index
            .get(name)
            .copied()
            .ok_or_else(|| CatError::DanglingReference(name.to_string()))
    };

    let mut mor_names = Vec::new();
    let mut dom = Vec::new();
    let mut cod = Vec::new();
    let mut mor_index: BTreeMap<String, usize> = BTreeMap::new();
    for m in &raw.morphisms {
        if mor_index.contains_key(&m.name) {
            return Err(CatError::DuplicateName(m.name.clone()));
        }
        mor_index.insert(m.name.clone(), mor_names.len());
        mor_names.push(m.name.clone());
        dom.push(resolve_ob(&m.dom)?);
        cod.push(resolve_ob(&m.cod)?);
    }

    let mut identity = vec![usize::MAX; objects.len()];
    for (x, f) in &raw.identities {
        let xi = resolve_ob(x)?;
        let fi = *mor_index.get(f).ok_or_else(|| CatError::DanglingReference(f.clone()))?;
        if dom[fi] != xi || cod[fi] != xi {
            return Err(CatError::UnitViolation(f.clone()));
        }
        identity[xi] = fi;
    }
    for (xi, x) in objects.iter().enumerate() {
        if identity[xi] != usize::MAX {
            continue;
        }
        let name = format!("id_{x}");
        match mor_index.get(&name) {
            Some(&fi) if dom[fi] == xi && cod[fi] == xi => identity[xi] = fi,
            Some(_) => return Err(CatError::DuplicateName(name)),
            None => {
                mor_index.insert(name.clone(), mor_names.len());
                identity[xi] = mor_names.len();
                mor_names.push(name);
                dom.push(xi);
                cod.push(xi);
            }
        }
    }
    if mor_names.len() > limits.max_morphisms {
        return Err(CatError::SizeBound {
            what: "morphism count",
            size: mor_names.len() as u64,
            cap: limits.max_morphisms as u64,
        });
    }

    let nm = mor_names.len();
    let mut table = vec![NONE; nm * nm];
    let resolve_mor = |name: &str| {
        mor_index
            .get(name)
            .copied()
            .ok_or_else(|| CatError::DanglingReference(name.to_string()))
    };
    for (g, f, h) in &raw.compose {
        let (gi, fi, hi) = (resolve_mor(g)?, resolve_mor(f)?, resolve_mor(h)?);
        if dom[gi] != cod[fi] || dom[hi] != dom[fi] || cod[hi] != cod[gi] {
            return Err(CatError::CompositeTypeMismatch {
                g: g.clone(),
                f: f.clone(),
                h: h.clone(),
            });
        }
        let cell = &mut table[gi * nm + fi];
        if *cell != NONE && *cell as usize != hi {
            return Err(CatError::ConflictingComposite {
                g: g.clone(),
                f: f.clone(),
            });
        }
        *cell = hi as u32;
    }
    FinCat::assemble(objects, mor_names, dom, cod, identity, table)
}

impl FinCat {
    /// Builds a category from index tables; `compose(g, f)` is consulted for every composable pair.
    pub fn from_fn(
        objects: Vec<String>,
        morphisms: Vec<(String, usize, usize)>,
        identity: Vec<usize>,
        mut compose: impl FnMut(usize, usize) -> Option<usize>,
        limits: &Limits,
    ) -> Result<FinCat, CatError> {
        if objects.len() > limits.max_objects {
            return Err(CatError::SizeBound {
                what: "object count",
                size: objects.len() as u64,
                cap: limits.max_objects as u64,
            });
        }
        if morphisms.len() > limits.max_morphisms {
            return Err(CatError::SizeBound {
                what: "morphism count",
                size: morphisms.len() as u64,
                cap: limits.max_morphisms as u64,
            });
        }
        let nm = morphisms.len();
        let mut mor_names = Vec::with_capacity(nm);
        let mut dom = Vec::with_capacity(nm);
        let mut cod = Vec::with_capacity(nm);
        for (name, d, c) in morphisms {
            if d >= objects.len() || c >= objects.len() {
                return Err(CatError::DanglingReference(name));
            }
            mor_names.push(name);
            dom.push(d);
            cod.push(c);
        }
        let mut table = vec![NONE; nm * nm];
        for g in 0..nm {
            for f in 0..nm {
                if dom[g] != cod[f] {
                    continue;
                }
                if let Some(h) = compose(g, f) {
                    if h >= nm || dom[h] != dom[f] || cod[h] != cod[g] {
                        return Err(CatError::CompositeTypeMismatch {
                            g: mor_names[g].clone(),
                            f: mor_names[f].clone(),
                            h: mor_names.get(h).cloned().unwrap_or_else(|| format!("#{h}")),
                        });
                    }
                    table[g * nm + f] = h as u32;
                }
            }
        }
        FinCat::assemble(objects, mor_names, dom, cod, identity, table)
    }

    fn assemble(
        objects: Vec<String>,
        mor_names: Vec<String>,
        dom: Vec<usize>,
        cod: Vec<usize>,
        identity: Vec<usize>,
        mut table: Vec<u32>,
    ) -> Result<FinCat, CatError> {
        let n = objects.len();
        let nm = mor_names.len();
        for (x, &i) in identity.iter().enumerate() {
            if i >= nm || dom[i] != x || cod[i] != x {
                return Err(CatError::UnitViolation(format!("identity of {}", objects[x])));
            }
        }
        // Unit composites are filled when absent and checked when declared.
        for f in 0..nm {
            for cell in [identity[cod[f]] * nm + f, f * nm + identity[dom[f]]] {
                if table[cell] == NONE {
                    table[cell] = f as u32;
                } else if table[cell] as usize != f {
                    return Err(CatError::UnitViolation(mor_names[f].clone()));
                }
            }
        }
        let mut into = vec![Vec::new(); n];
        for f in 0..nm {
            into[cod[f]].push(f);
        }
        for g in 0..nm {
            for &f in &into[dom[g]] {
                if table[g * nm + f] == NONE {
                    return Err(CatError::MissingComposite {
                        g: mor_names[g].clone(),
                        f: mor_names[f].clone(),
                    });
                }
            }
        }
        for h in 0..nm {
            for &g in &into[dom[h]] {
                let hg = table[h * nm + g] as usize;
                for &f in &into[dom[g]] {
                    let gf = table[g * nm + f] as usize;
                    if table[h * nm + gf] != table[hg * nm + f] {
                        return Err(CatError::AssociativityViolation {
                            h: mor_names[h].clone(),
                            g: mor_names[g].clone(),
                            f: mor_names[f].clone(),
                        });
                    }
                }
            }
        }
        let mut homs = vec![Vec::new(); n * n];
        let mut hom_pos = vec![0; nm];
        for f in 0..nm {
            let list = &mut homs[dom[f] * n + cod[f]];
            hom_pos[f] = list.len();
            list.push(f);
        }
        Ok(FinCat {
            objects,
            mor_names,
            dom,
            cod,
            identity,
            table,
            homs,
            hom_pos,
        })
    }

    pub fn terminal() -> FinCat {
        validate_fincat(&RawCat::new(&["*"])).expect("terminal category")
    }

    pub fn discrete(names: &[String]) -> FinCat {
        let raw = RawCat {
            objects: names.to_vec(),
            ..Default::default()
        };
        validate_fincat(&raw).expect("discrete category")
    }

    /// One-object category whose morphisms are the monoid elements; element 0 must be the unit.
    pub fn monoid(object: &str, elements: &[String], mul: &[usize]) -> Result<FinCat, CatError> {
        let k = elements.len();
        FinCat::from_fn(
            vec![object.to_string()],
            elements.iter().map(|e| (e.clone(), 0, 0)).collect(),
            vec![0],
            |g, f| mul.get(g * k + f).copied(),
            &Limits::default(),
        )
    }

    /// The preorder on `names` given by `leq(i, j)`; morphisms are named `i<=j` (identities `id_i`).
    pub fn preorder(names: &[String], leq: impl Fn(usize, usize) -> bool) -> Result<FinCat, CatError> {
        let n = names.len();
        let mut morphisms = Vec::new();
        let mut index = BTreeMap::new();
        let mut identity = vec![0; n];
        for i in 0..n {
            for j in 0..n {
                if leq(i, j) {
                    let name = if i == j {
                        identity[i] = morphisms.len();
                        format!("id_{}", names[i])
                    } else {
                        format!("{}<={}", names[i], names[j])
                    };
                    index.insert((i, j), morphisms.len());
                    morphisms.push((name, i, j));
                }
            }
        }
        let ends: Vec<(usize, usize)> = morphisms.iter().map(|(_, d, c)| (*d, *c)).collect();
        FinCat::from_fn(
            names.to_vec(),
            morphisms,
            identity,
            |g, f| index.get(&(ends[f].0, ends[g].1)).copied(),
            &Limits::default(),
        )
    }

    /// Cartesian product of categories; objects and morphisms are ordered lexicographically.
    pub fn product(a: &FinCat, b: &FinCat) -> Result<FinCat, CatError> {
        let (na, nb) = (a.object_count(), b.object_count());
        let (ma, mb) = (a.morphism_count(), b.morphism_count());
        let objects = (0..na * nb)
            .map(|i| format!("({},{})", a.objects[i / nb], b.objects[i % nb]))
            .collect();
        let morphisms = (0..ma * mb)
            .map(|i| {
                let (f, g) = (i / mb, i % mb);
                (
                    format!("({},{})", a.mor_names[f], b.mor_names[g]),
                    a.dom[f] * nb + b.dom[g],
                    a.cod[f] * nb + b.cod[g],
                )
            })
            .collect();
        let identity = (0..na * nb).map(|i| a.identity[i / nb] * mb + b.identity[i % nb]).collect();
        FinCat::from_fn(
            objects,
            morphisms,
            identity,
            |g, f| {
                let h1 = a.try_compose(g / mb, f / mb)?;
                let h2 = b.try_compose(g % mb, f % mb)?;
                Some(h1 * mb + h2)
            },
            &Limits::default(),
        )
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.mor_names.len()
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn object_name(&self, x: usize) -> &str {
        &self.objects[x]
    }

    pub fn morphism_name(&self, f: usize) -> &str {
        &self.mor_names[f]
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|x| x == name)
    }

    pub fn morphism_index(&self, name: &str) -> Option<usize> {
        self.mor_names.iter().position(|x| x == name)
    }

    pub fn source(&self, f: usize) -> usize {
        self.dom[f]
    }

    pub fn target(&self, f: usize) -> usize {
        self.cod[f]
    }

    pub fn id(&self, x: usize) -> usize {
        self.identity[x]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identity[self.dom[f]] == f
    }

    pub fn try_compose(&self, g: usize, f: usize) -> Option<usize> {
        let v = self.table[g * self.mor_names.len() + f];
        (v != NONE).then_some(v as usize)
    }

    /// `g ∘ f`; panics if not composable.
    pub fn comp(&self, g: usize, f: usize) -> usize {
        self.try_compose(g, f)
            .unwrap_or_else(|| panic!("{} ∘ {} is not composable", self.mor_names[g], self.mor_names[f]))
    }

    pub fn hom(&self, x: usize, y: usize) -> &[usize] {
        &self.homs[x * self.objects.len() + y]
    }

    /// Position of `f` inside `hom(dom f, cod f)`.
    pub fn hom_position(&self, f: usize) -> usize {
        self.hom_pos[f]
    }

    pub fn inverse_of(&self, f: usize) -> Option<usize> {
        let (x, y) = (self.dom[f], self.cod[f]);
        self.hom(y, x)
            .iter()
            .copied()
            .find(|&g| self.comp(g, f) == self.identity[x] && self.comp(f, g) == self.identity[y])
    }

    /// The name-level description this category was built from (identities and all composites explicit).
    pub fn to_raw(&self) -> RawCat {
        let nm = self.morphism_count();
        let mut compose = Vec::new();
        for g in 0..nm {
            for f in 0..nm {
                if let Some(h) = self.try_compose(g, f) {
                    compose.push((self.mor_names[g].clone(), self.mor_names[f].clone(), self.mor_names[h].clone()));
                }
            }
        }
        RawCat {
            objects: self.objects.clone(),
            morphisms: (0..nm)
                .map(|f| RawMorphism {
                    name: self.mor_names[f].clone(),
                    dom: self.objects[self.dom[f]].clone(),
                    cod: self.objects[self.cod[f]].clone(),
                })
                .collect(),
            identities: (0..self.object_count())
                .map(|x| (self.objects[x].clone(), self.mor_names[self.identity[x]].clone()))
                .collect(),
            compose,
        }
    }
}

impl Category for FinCat {
    type Ob = usize;
    type Mor = usize;

    fn dom(&self, f: &usize) -> usize {
        self.dom[*f]
    }
    fn cod(&self, f: &usize) -> usize {
        self.cod[*f]
    }
    fn identity(&self, x: &usize) -> usize {
        self.identity[*x]
    }
    fn compose(&self, g: &usize, f: &usize) -> Option<usize> {
        self.try_compose(*g, *f)
    }
}

impl Finite for FinCat {
    fn objects(&self) -> Vec<usize> {
        (0..self.object_count()).collect()
    }
    fn morphisms(&self) -> Vec<usize> {
        (0..self.morphism_count()).collect()
    }
    fn hom_set(&self, x: &usize, y: &usize) -> Vec<usize> {
        self.hom(*x, *y).to_vec()
    }
    fn inverse(&self, f: &usize) -> Option<usize> {
        self.inverse_of(*f)
    }
}

/// A functor between finite categories, as index maps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinFunctor {
    pub ob_map: Vec<usize>,
    pub mor_map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FunctorError {
    #[error("functor tables have the wrong length")]
    Shape,
    #[error("morphism `{0}` is sent to a morphism with the wrong endpoints")]
    EndpointMismatch(String),
    #[error("identity of `{0}` is not preserved")]
    IdentityNotPreserved(String),
    #[error("composite {g}∘{f} is not preserved")]
    CompositionNotPreserved { g: String, f: String },
}

impl FinFunctor {
    pub fn identity(c: &FinCat) -> FinFunctor {
        FinFunctor {
            ob_map: (0..c.object_count()).collect(),
            mor_map: (0..c.morphism_count()).collect(),
        }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &FinFunctor) -> FinFunctor {
        FinFunctor {
            ob_map: first.ob_map.iter().map(|&x| self.ob_map[x]).collect(),
            mor_map: first.mor_map.iter().map(|&f| self.mor_map[f]).collect(),
        }
    }

    pub fn check(&self, source: &FinCat, target: &FinCat) -> Result<(), FunctorError> {
        if self.ob_map.len() != source.object_count()
            || self.mor_map.len() != source.morphism_count()
            || self.ob_map.iter().any(|&y| y >= target.object_count())
            || self.mor_map.iter().any(|&g| g >= target.morphism_count())
        {
            return Err(FunctorError::Shape);
        }
        for f in 0..source.morphism_count() {
            let g = self.mor_map[f];
            if target.dom[g] != self.ob_map[source.dom[f]] || target.cod[g] != self.ob_map[source.cod[f]] {
                return Err(FunctorError::EndpointMismatch(source.mor_names[f].clone()));
            }
        }
        for x in 0..source.object_count() {
            if self.mor_map[source.identity[x]] != target.identity[self.ob_map[x]] {
                return Err(FunctorError::IdentityNotPreserved(source.objects[x].clone()));
            }
        }
        let nm = source.morphism_count();
        for g in 0..nm {
            for f in 0..nm {
                if let Some(h) = source.try_compose(g, f) {
                    if target.comp(self.mor_map[g], self.mor_map[f]) != self.mor_map[h] {
                        return Err(FunctorError::CompositionNotPreserved {
                            g: source.mor_names[g].clone(),
                            f: source.mor_names[f].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// All functors `source → target`, duplicate-free, in lexicographic order of `(ob_map, mor_map)`.
pub fn enumerate_functors(source: &FinCat, target: &FinCat, limits: &Limits) -> Result<Vec<FinFunctor>, CatError> {
    let (n, nm) = (source.object_count(), source.morphism_count());
    let mut raw: u64 = 1;
    for _ in 0..n {
        raw = raw.saturating_mul(target.object_count() as u64);
    }
    for f in 0..nm {
        if !source.is_identity(f) {
            raw = raw.saturating_mul(target.morphism_count() as u64);
        }
    }
    if raw > limits.max_candidates {
        return Err(CatError::SizeBound {
            what: "functor search space",
            size: raw,
            cap: limits.max_candidates,
        });
    }
    // Composition constraints are checked when the last of (g, f, g∘f) is assigned.
    let mut checks = vec![Vec::new(); nm];
    for g in 0..nm {
        for f in 0..nm {
            if let Some(h) = source.try_compose(g, f) {
                checks[g.max(f).max(h)].push((g, f, h));
            }
        }
    }
    let mut out = Vec::new();
    let mut ob_map = vec![0; n];
    enumerate_objects(source, target, &checks, 0, &mut ob_map, &mut out);
    Ok(out)
}

fn enumerate_objects(
    source: &FinCat,
    target: &FinCat,
    checks: &[Vec<(usize, usize, usize)>],
    x: usize,
    ob_map: &mut Vec<usize>,
    out: &mut Vec<FinFunctor>,
) {
    if x == ob_map.len() {
        let mut mor_map = vec![usize::MAX; source.morphism_count()];
        enumerate_morphisms(source, target, checks, 0, ob_map, &mut mor_map, out);
        return;
    }
    for y in 0..target.object_count() {
        ob_map[x] = y;
        enumerate_objects(source, target, checks, x + 1, ob_map, out);
    }
}

fn enumerate_morphisms(
    source: &FinCat,
    target: &FinCat,
    checks: &[Vec<(usize, usize, usize)>],
    f: usize,
    ob_map: &[usize],
    mor_map: &mut Vec<usize>,
    out: &mut Vec<FinFunctor>,
) {
    if f == mor_map.len() {
        out.push(FinFunctor {
            ob_map: ob_map.to_vec(),
            mor_map: mor_map.clone(),
        });
        return;
    }
    let candidates: Vec<usize> = if source.is_identity(f) {
        vec![target.identity[ob_map[source.dom[f]]]]
    } else {
        target.hom(ob_map[source.dom[f]], ob_map[source.cod[f]]).to_vec()
    };
    for c in candidates {
        mor_map[f] = c;
        let ok = checks[f].iter().all(|&(g, k, h)| target.comp(mor_map[g], mor_map[k]) == mor_map[h]);
        if ok {
            enumerate_morphisms(source, target, checks, f + 1, ob_map, mor_map, out);
        }
    }
    mor_map[f] = usize::MAX;
}

/// Outcome of [`check_nat_iso`]; every failure is listed by name.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NatVerdict {
    pub ill_typed: Vec<String>,
    pub non_invertible: Vec<String>,
    pub failing_squares: Vec<String>,
}

impl NatVerdict {
    pub fn is_valid(&self) -> bool {
        self.ill_typed.is_empty() && self.non_invertible.is_empty() && self.failing_squares.is_empty()
    }
}

/// Checks that `components` is a natural isomorphism `f ⇒ g` between functors `source → target`.
pub fn check_nat_iso(source: &FinCat, target: &FinCat, f: &FinFunctor, g: &FinFunctor, components: &[usize]) -> NatVerdict {
    let mut verdict = NatVerdict::default();
    let mut typed = vec![false; source.object_count()];
    for x in 0..source.object_count() {
        let c = components[x];
        if target.dom[c] != f.ob_map[x] || target.cod[c] != g.ob_map[x] {
            verdict.ill_typed.push(source.objects[x].clone());
            continue;
        }
        typed[x] = true;
        if target.inverse_of(c).is_none() {
            verdict.non_invertible.push(source.objects[x].clone());
        }
    }
    for u in 0..source.morphism_count() {
        let (x, y) = (source.dom[u], source.cod[u]);
        if !(typed[x] && typed[y]) {
            continue;
        }
        if target.comp(g.mor_map[u], components[x]) != target.comp(components[y], f.mor_map[u]) {
            verdict.failing_squares.push(source.mor_names[u].clone());
        }
    }
    verdict
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn names(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    fn walking_arrow() -> FinCat {
        validate_fincat(&RawCat::new(&["a", "b"]).morphism("u", "a", "b")).unwrap()
    }

    fn c3_raw() -> RawCat {
        let mut raw = RawCat::new(&["*"])
            .morphism("e", "*", "*")
            .morphism("r", "*", "*")
            .morphism("s", "*", "*");
        raw.identities.push(("*".into(), "e".into()));
        let els = ["e", "r", "s"];
        for i in 0..3 {
            for j in 0..3 {
                raw.compose.push((els[i].into(), els[j].into(), els[(i + j) % 3].into()));
            }
        }
        raw
    }

    #[test]
    fn terminal_and_walking_arrow_validate() {
        let t = FinCat::terminal();
        assert_eq!((t.object_count(), t.morphism_count()), (1, 1));
        let a = walking_arrow();
        assert_eq!(a.morphism_count(), 3);
        assert_eq!(a.morphism_name(1), "id_a");
        assert_eq!(a.hom(0, 1), &[0]);
        assert!(a.hom(1, 0).is_empty());
    }

    #[test]
    fn corrupted_cyclic_monoid_reports_the_first_failing_triple() {
        assert!(validate_fincat(&c3_raw()).is_ok());
        let mut raw = c3_raw();
        // r∘r should be s
        let cell = raw.compose.iter_mut().find(|(g, f, _)| g == "r" && f == "r").unwrap();
        cell.2 = "e".into();
        let err = validate_fincat(&raw).unwrap_err();
        // Oracle: brute-force every triple of the corrupted table.
        let idx = |s: &str| ["e", "r", "s"].iter().position(|x| *x == s).unwrap();
        let mut t = [[0usize; 3]; 3];
        for (g, f, h) in &raw.compose {
            t[idx(g)][idx(f)] = idx(h);
        }
        let mut failing = Vec::new();
        for h in 0..3 {
            for g in 0..3 {
                for f in 0..3 {
                    if t[h][t[g][f]] != t[t[h][g]][f] {
                        failing.push((h, g, f));
                    }
                }
            }
        }
        let els = ["e", "r", "s"];
        let (h, g, f) = failing[0];
        assert_eq!(
            err,
            CatError::AssociativityViolation {
                h: els[h].into(),
                g: els[g].into(),
                f: els[f].into()
            }
        );
        // every failing triple touches the corrupted cell
        let touches = |a: usize, b: usize| (a, b) == (1, 1);
        assert!(failing
            .iter()
            .all(|&(h, g, f)| touches(g, f) || touches(h, t[g][f]) || touches(h, g) || touches(t[h][g], f)));
    }

    #[test]
    fn missing_dangling_and_unit_errors() {
        let raw = RawCat::new(&["a"]).morphism("z", "a", "a");
        assert_eq!(
            validate_fincat(&raw).unwrap_err(),
            CatError::MissingComposite {
                g: "z".into(),
                f: "z".into()
            }
        );
        let raw = RawCat::new(&["a"]).morphism("z", "a", "b");
        assert_eq!(validate_fincat(&raw).unwrap_err(), CatError::DanglingReference("b".into()));
        let raw = RawCat::new(&["a"])
            .morphism("z", "a", "a")
            .composite("z", "z", "z")
            .composite("id_a", "z", "id_a");
        assert_eq!(validate_fincat(&raw).unwrap_err(), CatError::UnitViolation("z".into()));
    }

    #[test]
    fn functor_counts() {
        let t = FinCat::terminal();
        let a = walking_arrow();
        let lim = Limits::default();
        assert_eq!(enumerate_functors(&t, &a, &lim).unwrap().len(), 2);
        assert_eq!(enumerate_functors(&a, &t, &lim).unwrap().len(), 1);
        let aa = enumerate_functors(&a, &a, &lim).unwrap();
        assert_eq!(aa.len(), 3);
        assert_eq!(aa[0].ob_map, vec![0, 0]);
        assert_eq!(aa[1].ob_map, vec![0, 1]);
        assert_eq!(aa[2].ob_map, vec![1, 1]);
        let tiny = Limits {
            max_candidates: 2,
            ..Limits::default()
        };
        assert!(matches!(enumerate_functors(&a, &a, &tiny), Err(CatError::SizeBound { .. })));
    }

    #[test]
    fn functor_enumeration_matches_brute_force() {
        let c = FinCat::preorder(&names(&["0", "1", "2"]), |i, j| i <= j).unwrap();
        let d = FinCat::monoid("*", &names(&["e", "z"]), &[0, 1, 1, 1]).unwrap();
        for (src, tgt) in [(&c, &c), (&c, &d), (&d, &c), (&d, &d)] {
            let listed = enumerate_functors(src, tgt, &Limits::default()).unwrap();
            let mut brute = Vec::new();
            let n = src.object_count();
            let nm = src.morphism_count();
            let total_ob = tgt.object_count().pow(n as u32);
            let total_mor = tgt.morphism_count().pow(nm as u32);
            for o in 0..total_ob {
                let ob_map: Vec<usize> = (0..n)
                    .map(|i| o / tgt.object_count().pow((n - 1 - i) as u32) % tgt.object_count())
                    .collect();
                for m in 0..total_mor {
                    let mor_map: Vec<usize> = (0..nm)
                        .map(|i| m / tgt.morphism_count().pow((nm - 1 - i) as u32) % tgt.morphism_count())
                        .collect();
                    let cand = FinFunctor {
                        ob_map: ob_map.clone(),
                        mor_map,
                    };
                    if cand.check(src, tgt).is_ok() {
                        brute.push(cand);
                    }
                }
            }
            assert_eq!(listed, brute);
        }
    }

    #[test]
    fn functors_are_closed_under_composition() {
        let lim = Limits::default();
        let cats = [
            walking_arrow(),
            FinCat::preorder(&names(&["0", "1", "2"]), |i, j| i <= j).unwrap(),
            FinCat::monoid("*", &names(&["e", "z"]), &[0, 1, 1, 1]).unwrap(),
            validate_fincat(&RawCat::new(&["p", "q"]).morphism("u", "p", "q").morphism("v", "p", "q")).unwrap(),
        ];
        for c in &cats {
            for d in &cats {
                for e in &cats {
                    let ce = enumerate_functors(c, e, &lim).unwrap();
                    for f in enumerate_functors(c, d, &lim).unwrap() {
                        for g in enumerate_functors(d, e, &lim).unwrap() {
                            assert!(ce.binary_search(&g.after(&f)).is_ok());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn natural_isomorphism_checks() {
        let a = walking_arrow();
        let pp = validate_fincat(&RawCat::new(&["p", "q"]).morphism("u", "p", "q").morphism("v", "p", "q")).unwrap();
        let fs = enumerate_functors(&a, &pp, &Limits::default()).unwrap();
        for f in &fs {
            let comps: Vec<usize> = f.ob_map.iter().map(|&y| pp.id(y)).collect();
            assert!(check_nat_iso(&a, &pp, f, f, &comps).is_valid());
        }
        let fu = fs.iter().find(|f| f.mor_map[0] == 0).unwrap();
        let fv = fs.iter().find(|f| f.mor_map[0] == 1).unwrap();
        let comps = [pp.id(0), pp.id(1)];
        let verdict = check_nat_iso(&a, &pp, fu, fv, &comps);
        assert_eq!(verdict.failing_squares, vec!["u".to_string()]);
        assert!(verdict.non_invertible.is_empty());

        let m = FinCat::monoid("*", &names(&["e", "z"]), &[0, 1, 1, 1]).unwrap();
        let t = FinCat::terminal();
        let f = FinFunctor {
            ob_map: vec![0],
            mor_map: vec![0],
        };
        let verdict = check_nat_iso(&t, &m, &f, &f, &[1]);
        assert_eq!(verdict.non_invertible, vec!["*".to_string()]);
        assert!(verdict.failing_squares.is_empty());
    }

    #[test]
    fn product_category_is_valid() {
        let b = FinCat::preorder(&names(&["0", "1"]), |i, j| i <= j).unwrap();
        let m = FinCat::monoid("*", &names(&["e", "g"]), &[0, 1, 1, 0]).unwrap();
        let p = FinCat::product(&m, &b).unwrap();
        assert_eq!((p.object_count(), p.morphism_count()), (2, 6));
        let again = validate_fincat(&p.to_raw()).unwrap();
        assert_eq!(again, p);
    }
}
