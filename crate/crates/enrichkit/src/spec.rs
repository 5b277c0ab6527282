//! The JSON input format.
//!
//! An input file declares named instances in sections, each referring to earlier
//! declarations by name:
//!
//! ```json
//! {
//!   "enrichkit-spec": 1,
//!   "categories": { "B": { "objects": ["0", "1"], "morphisms": [{"name": "0<=1", "dom": "0", "cod": "1"}] } },
//!   "monoidal":   { "Bool": { "category": "B", "unit": "1", "tensor_ob": [["0","0","0"], …], "tensor_mor": [[…]] } },
//!   "enriched":   { "chain": { "base": "Bool", "objects": ["a","b"], "hom": [["a","b","1"], …], "unit": [["a","id_1"], …], "comp": [["a","a","b","id_1"], …] } }
//! }
//! ```
//!
//! Identities `id_x` and composites or tensors of identities may be omitted; every
//! other table cell must be listed exactly once. Parsing resolves every name but
//! checks no laws: law violations are reported by the `validate` command.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use enrichkit_core::fincat::{validate_fincat_with, RawMorphism};
use enrichkit_core::wcolim::{set_diagram, set_weight, Weight};
use enrichkit_core::{
    enriched::RawMCat, Enriched, FinCat, FinFunctor, LTensored, Limits, MCat, MFunET, MFunTT, MonStr, Presheaf, RawCat, SetEnriched, SkMap,
    SkSet,
};
use indexmap::IndexMap;
use serde::Deserialize;

pub const VERSION: u64 = 1;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unresolved reference `{name}` in {context}")]
    UnresolvedReference { name: String, context: String },
    #[error("schema violation: {0}")]
    SchemaViolation(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

/// Failure to turn a declaration into a validated core structure.
#[derive(Debug, thiserror::Error)]
pub enum BuildError {
    #[error(transparent)]
    Invalid(#[from] enrichkit_core::Error),
    #[error("depends on invalid {kind} `{name}`")]
    Dependency { kind: &'static str, name: String },
}

impl BuildError {
    fn wrap<E: Into<enrichkit_core::Error>>(e: E) -> BuildError {
        BuildError::Invalid(e.into())
    }
}

#[derive(Debug, Clone, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct MorphismDecl {
    pub name: String,
    pub dom: String,
    pub cod: String,
}

#[derive(Debug, Clone, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CategoryDecl {
    pub objects: Vec<String>,
    #[serde(default)]
    pub morphisms: Vec<MorphismDecl>,
    #[serde(default)]
    pub identities: IndexMap<String, String>,
    #[serde(default)]
    pub compose: Vec<(String, String, String)>,
}

#[derive(Debug, Clone, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct MonoidalDecl {
    pub category: String,
    pub unit: String,
    pub tensor_ob: Vec<(String, String, String)>,
    #[serde(default)]
    pub tensor_mor: Vec<(String, String, String)>,
}

#[derive(Debug, Clone, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct EnrichedDecl {
    pub base: String,
    pub objects: Vec<String>,
    pub hom: Vec<(String, String, String)>,
    pub unit: Vec<(String, String)>,
    pub comp: Vec<(String, String, String, String)>,
}

#[derive(Debug, Clone, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ModuleDecl {
    pub base: String,
    pub category: String,
    pub act_ob: Vec<(String, String, String)>,
    #[serde(default)]
    pub act_mor: Vec<(String, String, String)>,
}

#[derive(Debug, Clone, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct TensoredFunctorDecl {
    pub source: String,
    pub target: String,
    pub ob_map: IndexMap<String, String>,
    #[serde(default)]
    pub mor_map: IndexMap<String, String>,
    pub sigma: Vec<(String, String, String)>,
}

#[derive(Debug, Clone, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct MFunctorDecl {
    pub source: String,
    pub target: String,
    pub ob_map: IndexMap<String, String>,
    pub phi: Vec<(String, String, String)>,
}

#[derive(Debug, Clone, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PresheafDecl {
    pub on: String,
    pub values: IndexMap<String, String>,
    pub action: Vec<(String, String, String)>,
}

/// A Set-valued functor on a declared category: cardinalities and one function table per
/// non-identity morphism. Diagrams are covariant, weights contravariant.
#[derive(Debug, Clone, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SetFunctorDecl {
    pub category: String,
    pub values: IndexMap<String, usize>,
    #[serde(default)]
    pub maps: IndexMap<String, Vec<usize>>,
}

#[derive(Debug, Clone, Deserialize, PartialEq, Eq, Default)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    #[serde(rename = "enrichkit-spec")]
    pub version: u64,
    #[serde(default)]
    pub categories: IndexMap<String, CategoryDecl>,
    #[serde(default)]
    pub monoidal: IndexMap<String, MonoidalDecl>,
    #[serde(default)]
    pub enriched: IndexMap<String, EnrichedDecl>,
    #[serde(default)]
    pub modules: IndexMap<String, ModuleDecl>,
    #[serde(default)]
    pub tensored_functors: IndexMap<String, TensoredFunctorDecl>,
    #[serde(default)]
    pub mfunctors: IndexMap<String, MFunctorDecl>,
    #[serde(default)]
    pub presheaves: IndexMap<String, PresheafDecl>,
    #[serde(default)]
    pub diagrams: IndexMap<String, SetFunctorDecl>,
    #[serde(default)]
    pub weights: IndexMap<String, SetFunctorDecl>,
}

pub fn parse_spec_file(path: &std::path::Path) -> Result<SpecFile, SpecError> {
    let text = std::fs::read_to_string(path).map_err(|e| SpecError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_spec(&text)
}

pub fn parse_spec(text: &str) -> Result<SpecFile, SpecError> {
    let value: serde_json::Value = if text.trim().is_empty() {
        serde_json::Value::Object(Default::default())
    } else {
        serde_json::from_str(text).map_err(|e| SpecError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?
    };
    let Some(obj) = value.as_object() else {
        return Err(SpecError::SchemaViolation("top level must be an object".into()));
    };
    match obj.get("enrichkit-spec") {
        None => return Err(SpecError::SchemaViolation("missing required version field `enrichkit-spec`".into())),
        Some(v) if v.as_u64() != Some(VERSION) => {
            return Err(SpecError::SchemaViolation(format!("unsupported version {v}, expected {VERSION}")));
        }
        Some(_) => {}
    }
    let spec: SpecFile = serde_json::from_value(value).map_err(|e| SpecError::SchemaViolation(e.to_string()))?;
    spec.resolve()?;
    Ok(spec)
}

/// Object and morphism names of a category declaration, implicit identities included.
#[derive(Debug, Clone)]
struct Names {
    objects: Vec<String>,
    morphisms: Vec<String>,
    identity: BTreeMap<String, String>,
}

impl Names {
    fn of(decl: &CategoryDecl) -> Names {
        let mut morphisms: Vec<String> = decl.morphisms.iter().map(|m| m.name.clone()).collect();
        let mut ends: BTreeMap<String, (String, String)> = decl
            .morphisms
            .iter()
            .map(|m| (m.name.clone(), (m.dom.clone(), m.cod.clone())))
            .collect();
        let mut identity = BTreeMap::new();
        for x in &decl.objects {
            let id = decl.identities.get(x).cloned().unwrap_or_else(|| format!("id_{x}"));
            if !ends.contains_key(&id) {
                morphisms.push(id.clone());
                ends.insert(id.clone(), (x.clone(), x.clone()));
            }
            identity.insert(x.clone(), id);
        }
        Names {
            objects: decl.objects.clone(),
            morphisms,
            identity,
        }
    }

    fn is_identity(&self, f: &str) -> bool {
        self.identity.values().any(|i| i == f)
    }
}

struct Ctx<'a> {
    section: &'static str,
    name: &'a str,
}

impl Ctx<'_> {
    fn need(&self, list: &[String], name: &str) -> Result<(), SpecError> {
        if list.iter().any(|x| x == name) {
            Ok(())
        } else {
            Err(SpecError::UnresolvedReference {
                name: name.into(),
                context: format!("{} `{}`", self.section, self.name),
            })
        }
    }

    fn need_key<V>(&self, map: &IndexMap<String, V>, name: &str) -> Result<(), SpecError> {
        if map.contains_key(name) {
            Ok(())
        } else {
            Err(SpecError::UnresolvedReference {
                name: name.into(),
                context: format!("{} `{}`", self.section, self.name),
            })
        }
    }

    /// Every key in `required` must occur exactly once among `present`.
    fn complete(&self, table: &str, present: Vec<Vec<String>>, required: Vec<Vec<String>>) -> Result<(), SpecError> {
        let mut seen = BTreeSet::new();
        for key in present {
            if !seen.insert(key.clone()) {
                return Err(SpecError::SchemaViolation(format!(
                    "{} `{}`: {table} lists ({}) twice",
                    self.section,
                    self.name,
                    key.join(", ")
                )));
            }
        }
        for key in required {
            if !seen.contains(&key) {
                return Err(SpecError::SchemaViolation(format!(
                    "{} `{}`: {table} is missing ({})",
                    self.section,
                    self.name,
                    key.join(", ")
                )));
            }
        }
        Ok(())
    }
}

fn pairs(a: &[String], b: &[String]) -> Vec<Vec<String>> {
    a.iter().flat_map(|x| b.iter().map(move |y| vec![x.clone(), y.clone()])).collect()
}

fn triples(a: &[String]) -> Vec<Vec<String>> {
    a.iter()
        .flat_map(|x| {
            a.iter()
                .flat_map(move |y| a.iter().map(move |z| vec![x.clone(), y.clone(), z.clone()]))
        })
        .collect()
}

impl SpecFile {
    fn names(&self, category: &str) -> Names {
        Names::of(&self.categories[category])
    }

    fn monoidal_names(&self, base: &str) -> Names {
        self.names(&self.monoidal[base].category)
    }

    fn resolve(&self) -> Result<(), SpecError> {
        let sections: [(&str, Vec<&String>); 9] = [
            ("categories", self.categories.keys().collect()),
            ("monoidal", self.monoidal.keys().collect()),
            ("enriched", self.enriched.keys().collect()),
            ("modules", self.modules.keys().collect()),
            ("tensored_functors", self.tensored_functors.keys().collect()),
            ("mfunctors", self.mfunctors.keys().collect()),
            ("presheaves", self.presheaves.keys().collect()),
            ("diagrams", self.diagrams.keys().collect()),
            ("weights", self.weights.keys().collect()),
        ];
        let mut all = BTreeMap::new();
        for (section, keys) in &sections {
            for k in keys {
                if let Some(other) = all.insert(k.to_string(), *section) {
                    return Err(SpecError::SchemaViolation(format!(
                        "name `{k}` declared in both {other} and {section}"
                    )));
                }
            }
        }
        for (name, c) in &self.categories {
            let ctx = Ctx { section: "category", name };
            let names = Names::of(c);
            for m in &c.morphisms {
                ctx.need(&c.objects, &m.dom)?;
                ctx.need(&c.objects, &m.cod)?;
            }
            for (x, f) in &c.identities {
                ctx.need(&c.objects, x)?;
                ctx.need(&names.morphisms, f)?;
            }
            for (g, f, h) in &c.compose {
                for m in [g, f, h] {
                    ctx.need(&names.morphisms, m)?;
                }
            }
        }
        for (name, m) in &self.monoidal {
            let ctx = Ctx { section: "monoidal", name };
            ctx.need_key(&self.categories, &m.category)?;
            let names = self.names(&m.category);
            ctx.need(&names.objects, &m.unit)?;
            for (a, b, ab) in &m.tensor_ob {
                for x in [a, b, ab] {
                    ctx.need(&names.objects, x)?;
                }
            }
            ctx.complete(
                "tensor_ob",
                m.tensor_ob.iter().map(|(a, b, _)| vec![a.clone(), b.clone()]).collect(),
                pairs(&names.objects, &names.objects),
            )?;
            for (g, f, gf) in &m.tensor_mor {
                for x in [g, f, gf] {
                    ctx.need(&names.morphisms, x)?;
                }
            }
            let required = pairs(&names.morphisms, &names.morphisms)
                .into_iter()
                .filter(|k| !(names.is_identity(&k[0]) && names.is_identity(&k[1])))
                .collect();
            ctx.complete(
                "tensor_mor",
                m.tensor_mor.iter().map(|(a, b, _)| vec![a.clone(), b.clone()]).collect(),
                required,
            )?;
        }
        for (name, e) in &self.enriched {
            let ctx = Ctx { section: "enriched", name };
            ctx.need_key(&self.monoidal, &e.base)?;
            let base = self.monoidal_names(&e.base);
            for (x, y, h) in &e.hom {
                ctx.need(&e.objects, x)?;
                ctx.need(&e.objects, y)?;
                ctx.need(&base.objects, h)?;
            }
            for (x, u) in &e.unit {
                ctx.need(&e.objects, x)?;
                ctx.need(&base.morphisms, u)?;
            }
            for (x, y, z, c) in &e.comp {
                for o in [x, y, z] {
                    ctx.need(&e.objects, o)?;
                }
                ctx.need(&base.morphisms, c)?;
            }
            ctx.complete(
                "hom",
                e.hom.iter().map(|(x, y, _)| vec![x.clone(), y.clone()]).collect(),
                pairs(&e.objects, &e.objects),
            )?;
            ctx.complete(
                "unit",
                e.unit.iter().map(|(x, _)| vec![x.clone()]).collect(),
                e.objects.iter().map(|x| vec![x.clone()]).collect(),
            )?;
            ctx.complete(
                "comp",
                e.comp.iter().map(|(x, y, z, _)| vec![x.clone(), y.clone(), z.clone()]).collect(),
                triples(&e.objects),
            )?;
        }
        for (name, m) in &self.modules {
            let ctx = Ctx { section: "module", name };
            ctx.need_key(&self.monoidal, &m.base)?;
            ctx.need_key(&self.categories, &m.category)?;
            let (base, carrier) = (self.monoidal_names(&m.base), self.names(&m.category));
            for (a, c, ac) in &m.act_ob {
                ctx.need(&base.objects, a)?;
                ctx.need(&carrier.objects, c)?;
                ctx.need(&carrier.objects, ac)?;
            }
            for (f, s, fs) in &m.act_mor {
                ctx.need(&base.morphisms, f)?;
                ctx.need(&carrier.morphisms, s)?;
                ctx.need(&carrier.morphisms, fs)?;
            }
            ctx.complete(
                "act_ob",
                m.act_ob.iter().map(|(a, c, _)| vec![a.clone(), c.clone()]).collect(),
                pairs(&base.objects, &carrier.objects),
            )?;
            let required = pairs(&base.morphisms, &carrier.morphisms)
                .into_iter()
                .filter(|k| !(base.is_identity(&k[0]) && carrier.is_identity(&k[1])))
                .collect();
            ctx.complete(
                "act_mor",
                m.act_mor.iter().map(|(a, c, _)| vec![a.clone(), c.clone()]).collect(),
                required,
            )?;
        }
        for (name, t) in &self.tensored_functors {
            let ctx = Ctx {
                section: "tensored functor",
                name,
            };
            ctx.need_key(&self.modules, &t.source)?;
            ctx.need_key(&self.modules, &t.target)?;
            let (s, g) = (&self.modules[&t.source], &self.modules[&t.target]);
            if s.base != g.base {
                return Err(SpecError::SchemaViolation(format!(
                    "tensored functor `{name}`: source and target have different bases"
                )));
            }
            let (sc, tc, base) = (self.names(&s.category), self.names(&g.category), self.monoidal_names(&s.base));
            for (a, b) in &t.ob_map {
                ctx.need(&sc.objects, a)?;
                ctx.need(&tc.objects, b)?;
            }
            for (f, g) in &t.mor_map {
                ctx.need(&sc.morphisms, f)?;
                ctx.need(&tc.morphisms, g)?;
            }
            for (m, a, s) in &t.sigma {
                ctx.need(&base.objects, m)?;
                ctx.need(&sc.objects, a)?;
                ctx.need(&tc.morphisms, s)?;
            }
            ctx.complete(
                "ob_map",
                t.ob_map.keys().map(|k| vec![k.clone()]).collect(),
                sc.objects.iter().map(|x| vec![x.clone()]).collect(),
            )?;
            ctx.complete(
                "mor_map",
                t.mor_map.keys().map(|k| vec![k.clone()]).collect(),
                sc.morphisms
                    .iter()
                    .filter(|f| !sc.is_identity(f))
                    .map(|x| vec![x.clone()])
                    .collect(),
            )?;
            ctx.complete(
                "sigma",
                t.sigma.iter().map(|(m, a, _)| vec![m.clone(), a.clone()]).collect(),
                pairs(&base.objects, &sc.objects),
            )?;
        }
        for (name, f) in &self.mfunctors {
            let ctx = Ctx { section: "mfunctor", name };
            ctx.need_key(&self.enriched, &f.source)?;
            ctx.need_key(&self.modules, &f.target)?;
            let (a, b) = (&self.enriched[&f.source], &self.modules[&f.target]);
            if a.base != b.base {
                return Err(SpecError::SchemaViolation(format!(
                    "mfunctor `{name}`: source and target have different bases"
                )));
            }
            let carrier = self.names(&b.category);
            for (x, y) in &f.ob_map {
                ctx.need(&a.objects, x)?;
                ctx.need(&carrier.objects, y)?;
            }
            for (x, y, p) in &f.phi {
                ctx.need(&a.objects, x)?;
                ctx.need(&a.objects, y)?;
                ctx.need(&carrier.morphisms, p)?;
            }
            ctx.complete(
                "ob_map",
                f.ob_map.keys().map(|k| vec![k.clone()]).collect(),
                a.objects.iter().map(|x| vec![x.clone()]).collect(),
            )?;
            ctx.complete(
                "phi",
                f.phi.iter().map(|(x, y, _)| vec![x.clone(), y.clone()]).collect(),
                pairs(&a.objects, &a.objects),
            )?;
        }
        for (name, p) in &self.presheaves {
            let ctx = Ctx { section: "presheaf", name };
            ctx.need_key(&self.enriched, &p.on)?;
            let a = &self.enriched[&p.on];
            let base = self.monoidal_names(&a.base);
            for (x, v) in &p.values {
                ctx.need(&a.objects, x)?;
                ctx.need(&base.objects, v)?;
            }
            for (x, y, m) in &p.action {
                ctx.need(&a.objects, x)?;
                ctx.need(&a.objects, y)?;
                ctx.need(&base.morphisms, m)?;
            }
            ctx.complete(
                "values",
                p.values.keys().map(|k| vec![k.clone()]).collect(),
                a.objects.iter().map(|x| vec![x.clone()]).collect(),
            )?;
            ctx.complete(
                "action",
                p.action.iter().map(|(x, y, _)| vec![x.clone(), y.clone()]).collect(),
                pairs(&a.objects, &a.objects),
            )?;
        }
        for (section, table) in [("diagram", &self.diagrams), ("weight", &self.weights)] {
            for (name, d) in table {
                let ctx = Ctx { section, name };
                ctx.need_key(&self.categories, &d.category)?;
                let names = self.names(&d.category);
                for x in d.values.keys() {
                    ctx.need(&names.objects, x)?;
                }
                for f in d.maps.keys() {
                    ctx.need(&names.morphisms, f)?;
                }
                ctx.complete(
                    "values",
                    d.values.keys().map(|k| vec![k.clone()]).collect(),
                    names.objects.iter().map(|x| vec![x.clone()]).collect(),
                )?;
                ctx.complete(
                    "maps",
                    d.maps.keys().map(|k| vec![k.clone()]).collect(),
                    names
                        .morphisms
                        .iter()
                        .filter(|f| !names.is_identity(f))
                        .map(|x| vec![x.clone()])
                        .collect(),
                )?;
            }
        }
        Ok(())
    }

    pub fn raw_category(&self, name: &str) -> RawCat {
        let c = &self.categories[name];
        RawCat {
            objects: c.objects.clone(),
            morphisms: c
                .morphisms
                .iter()
                .map(|m| RawMorphism {
                    name: m.name.clone(),
                    dom: m.dom.clone(),
                    cod: m.cod.clone(),
                })
                .collect(),
            identities: c.identities.iter().map(|(x, f)| (x.clone(), f.clone())).collect(),
            compose: c.compose.clone(),
        }
    }

    pub fn category(&self, name: &str, limits: &Limits) -> Result<FinCat, BuildError> {
        validate_fincat_with(&self.raw_category(name), limits).map_err(BuildError::wrap)
    }

    fn dep_category(&self, name: &str, limits: &Limits) -> Result<FinCat, BuildError> {
        self.category(name, limits).map_err(|_| BuildError::Dependency {
            kind: "category",
            name: name.into(),
        })
    }

    pub fn monoidal(&self, name: &str, limits: &Limits) -> Result<Arc<MonStr>, BuildError> {
        let m = &self.monoidal[name];
        let c = self.dep_category(&m.category, limits)?;
        let (n, k) = (c.object_count(), c.morphism_count());
        let ob = |x: &str| c.object_index(x).expect("resolved");
        let mor = |x: &str| c.morphism_index(x).expect("resolved");
        let mut tensor_ob = vec![0; n * n];
        for (a, b, ab) in &m.tensor_ob {
            tensor_ob[ob(a) * n + ob(b)] = ob(ab);
        }
        let mut tensor_mor: Vec<usize> = (0..k * k)
            .map(|i| {
                let (g, f) = (i / k, i % k);
                if c.is_identity(g) && c.is_identity(f) {
                    c.id(tensor_ob[c.source(g) * n + c.source(f)])
                } else {
                    usize::MAX
                }
            })
            .collect();
        for (g, f, gf) in &m.tensor_mor {
            tensor_mor[mor(g) * k + mor(f)] = mor(gf);
        }
        MonStr::new(c.clone(), ob(&m.unit), tensor_ob, tensor_mor)
            .map(Arc::new)
            .map_err(BuildError::wrap)
    }

    fn dep_monoidal(&self, name: &str, limits: &Limits) -> Result<Arc<MonStr>, BuildError> {
        self.monoidal(name, limits).map_err(|_| BuildError::Dependency {
            kind: "monoidal structure",
            name: name.into(),
        })
    }

    pub fn enriched(&self, name: &str, limits: &Limits) -> Result<MCat, BuildError> {
        let e = &self.enriched[name];
        let base = self.dep_monoidal(&e.base, limits)?;
        let c = base.carrier();
        let n = e.objects.len();
        let x = |s: &str| e.objects.iter().position(|o| o == s).expect("resolved");
        let mut raw = RawMCat {
            objects: e.objects.clone(),
            hom: vec![0; n * n],
            unit: vec![0; n],
            comp: vec![0; n * n * n],
        };
        for (a, b, h) in &e.hom {
            raw.hom[x(a) * n + x(b)] = c.object_index(h).expect("resolved");
        }
        for (a, u) in &e.unit {
            raw.unit[x(a)] = c.morphism_index(u).expect("resolved");
        }
        for (a, b, d, m) in &e.comp {
            raw.comp[(x(a) * n + x(b)) * n + x(d)] = c.morphism_index(m).expect("resolved");
        }
        MCat::new(base, raw).map_err(BuildError::wrap)
    }

    fn dep_enriched(&self, name: &str, limits: &Limits) -> Result<MCat, BuildError> {
        self.enriched(name, limits).map_err(|_| BuildError::Dependency {
            kind: "enriched category",
            name: name.into(),
        })
    }

    pub fn module(&self, name: &str, limits: &Limits) -> Result<LTensored, BuildError> {
        let m = &self.modules[name];
        let base = self.dep_monoidal(&m.base, limits)?;
        let carrier = self.dep_category(&m.category, limits)?;
        let bc = base.carrier();
        let (nb, kb) = (bc.object_count(), bc.morphism_count());
        let (nc, kc) = (carrier.object_count(), carrier.morphism_count());
        let mut act_ob = vec![0; nb * nc];
        for (a, s, t) in &m.act_ob {
            act_ob[bc.object_index(a).expect("resolved") * nc + carrier.object_index(s).expect("resolved")] =
                carrier.object_index(t).expect("resolved");
        }
        let mut act_mor: Vec<usize> = (0..kb * kc)
            .map(|i| {
                let (f, s) = (i / kc, i % kc);
                if bc.is_identity(f) && carrier.is_identity(s) {
                    carrier.id(act_ob[bc.source(f) * nc + carrier.source(s)])
                } else {
                    usize::MAX
                }
            })
            .collect();
        for (f, s, t) in &m.act_mor {
            act_mor[bc.morphism_index(f).expect("resolved") * kc + carrier.morphism_index(s).expect("resolved")] =
                carrier.morphism_index(t).expect("resolved");
        }
        LTensored::new(base, carrier, act_ob, act_mor).map_err(BuildError::wrap)
    }

    fn dep_module(&self, name: &str, limits: &Limits) -> Result<LTensored, BuildError> {
        self.module(name, limits).map_err(|_| BuildError::Dependency {
            kind: "module",
            name: name.into(),
        })
    }

    /// Source, target and the unvalidated functor data.
    pub fn tensored_functor(&self, name: &str, limits: &Limits) -> Result<(LTensored, LTensored, MFunTT), BuildError> {
        let t = &self.tensored_functors[name];
        let s = self.dep_module(&t.source, limits)?;
        let g = self.dep_module(&t.target, limits)?;
        let (sc, tc) = (s.carrier(), g.carrier());
        let ob_map: Vec<usize> = sc
            .object_names()
            .iter()
            .map(|x| tc.object_index(&t.ob_map[x]).expect("resolved"))
            .collect();
        let mor_map = (0..sc.morphism_count())
            .map(|f| match t.mor_map.get(sc.morphism_name(f)) {
                Some(h) => tc.morphism_index(h).expect("resolved"),
                None => tc.id(ob_map[sc.source(f)]),
            })
            .collect();
        let bc = s.base_arc().carrier();
        let nc = sc.object_count();
        let mut sigma = vec![0; bc.object_count() * nc];
        for (m, a, v) in &t.sigma {
            sigma[bc.object_index(m).expect("resolved") * nc + sc.object_index(a).expect("resolved")] =
                tc.morphism_index(v).expect("resolved");
        }
        Ok((
            s,
            g,
            MFunTT {
                functor: FinFunctor { ob_map, mor_map },
                sigma,
            },
        ))
    }

    pub fn mfunctor(&self, name: &str, limits: &Limits) -> Result<(MCat, LTensored, MFunET<usize, usize>), BuildError> {
        let f = &self.mfunctors[name];
        let a = self.dep_enriched(&f.source, limits)?;
        let b = self.dep_module(&f.target, limits)?;
        let c = b.carrier();
        let names = a.object_names().to_vec();
        let n = names.len();
        let x = |s: &str| names.iter().position(|o| o == s).expect("resolved");
        let ob_map = names.iter().map(|o| c.object_index(&f.ob_map[o]).expect("resolved")).collect();
        let mut phi = vec![0; n * n];
        for (p, q, m) in &f.phi {
            phi[x(p) * n + x(q)] = c.morphism_index(m).expect("resolved");
        }
        Ok((a, b, MFunET { ob_map, phi }))
    }

    pub fn presheaf(&self, name: &str, limits: &Limits) -> Result<(MCat, Presheaf<usize, usize>), BuildError> {
        let p = &self.presheaves[name];
        let a = self.dep_enriched(&p.on, limits)?;
        let c = a.base().carrier();
        let names = a.object_names().to_vec();
        let n = names.len();
        let x = |s: &str| names.iter().position(|o| o == s).expect("resolved");
        let values = names.iter().map(|o| c.object_index(&p.values[o]).expect("resolved")).collect();
        let mut action = vec![0; n * n];
        for (u, v, m) in &p.action {
            action[x(u) * n + x(v)] = c.morphism_index(m).expect("resolved");
        }
        Ok((a, Presheaf { values, action }))
    }

    fn set_tables(&self, d: &SetFunctorDecl, cat: &FinCat, contravariant: bool) -> Result<(Vec<usize>, Vec<SkMap>), BuildError> {
        let values: Vec<usize> = cat.object_names().iter().map(|x| d.values[x]).collect();
        let maps = (0..cat.morphism_count())
            .map(|f| {
                let (s, t) = (cat.source(f), cat.target(f));
                let (s, t) = if contravariant { (t, s) } else { (s, t) };
                let table = match d.maps.get(cat.morphism_name(f)) {
                    Some(t) => t.clone(),
                    None => (0..values[s]).collect(),
                };
                if table.len() != values[s] {
                    return Err(BuildError::Invalid(enrichkit_core::Error::Set(
                        enrichkit_core::SetError::ShapeMismatch,
                    )));
                }
                SkMap::new(values[t], table).map_err(BuildError::wrap)
            })
            .collect::<Result<_, _>>()?;
        Ok((values, maps))
    }

    pub fn diagram(&self, name: &str, limits: &Limits) -> Result<(SetEnriched, MFunET<SkSet, SkMap>), BuildError> {
        let d = &self.diagrams[name];
        let a = SetEnriched::new(self.dep_category(&d.category, limits)?);
        let (values, maps) = self.set_tables(d, a.category(), false)?;
        let f = set_diagram(&a, &values, &maps).map_err(BuildError::wrap)?;
        Ok((a, f))
    }

    pub fn weight(&self, name: &str, limits: &Limits) -> Result<(SetEnriched, Weight), BuildError> {
        let d = &self.weights[name];
        let a = SetEnriched::new(self.dep_category(&d.category, limits)?);
        let (values, maps) = self.set_tables(d, a.category(), true)?;
        let w = set_weight(&a, &values, &maps).map_err(BuildError::wrap)?;
        Ok((a, w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CHAIN: &str = r#"{
      "enrichkit-spec": 1,
      "categories": { "B": { "objects": ["0", "1"], "morphisms": [{"name": "0<=1", "dom": "0", "cod": "1"}] } },
      "monoidal": { "Bool": { "category": "B", "unit": "1",
          "tensor_ob": [["0","0","0"],["0","1","0"],["1","0","0"],["1","1","1"]],
          "tensor_mor": [["0<=1","0<=1","0<=1"],["0<=1","id_0","id_0"],["0<=1","id_1","0<=1"],["id_0","0<=1","id_0"],["id_1","0<=1","0<=1"]] } },
      "enriched": { "chain": { "base": "Bool", "objects": ["a","b"],
          "hom": [["a","a","1"],["a","b","1"],["b","a","0"],["b","b","1"]],
          "unit": [["a","id_1"],["b","id_1"]],
          "comp": [["a","a","a","id_1"],["a","a","b","id_1"],["a","b","a","0<=1"],["a","b","b","id_1"],
                   ["b","a","a","id_0"],["b","a","b","0<=1"],["b","b","a","id_0"],["b","b","b","id_1"]] } }
    }"#;

    #[test]
    fn chain_parses_and_builds() {
        let s = parse_spec(CHAIN).unwrap();
        assert_eq!((s.monoidal.len(), s.enriched.len()), (1, 1));
        let a = s.enriched("chain", &Limits::default()).unwrap();
        let b = enrichkit_core::instances::boolean_chain();
        let named = |m: &MCat| -> Vec<String> {
            let c = m.base().carrier();
            m.raw()
                .comp
                .iter()
                .chain(&m.raw().unit)
                .map(|&f| c.morphism_name(f).to_string())
                .collect()
        };
        assert_eq!(named(&a), named(&b));
        assert_eq!(a.raw().hom, b.raw().hom);
    }

    #[test]
    fn undeclared_object_is_unresolved() {
        let bad = CHAIN.replace(r#"["b","b","1"]"#, r#"["b","c","1"]"#);
        assert!(matches!(parse_spec(&bad), Err(SpecError::UnresolvedReference { name, .. }) if name == "c"));
    }

    #[test]
    fn empty_file_misses_the_version() {
        assert!(matches!(parse_spec(""), Err(SpecError::SchemaViolation(m)) if m.contains("enrichkit-spec")));
        assert!(matches!(parse_spec("{}"), Err(SpecError::SchemaViolation(_))));
    }

    #[test]
    fn syntax_errors_carry_a_position() {
        let e = parse_spec("{\n  \"enrichkit-spec\": 1,\n  oops\n}").unwrap_err();
        assert!(matches!(e, SpecError::Parse { line: 3, .. }), "{e:?}");
    }

    #[test]
    fn missing_and_duplicate_cells_are_schema_violations() {
        let missing = CHAIN
            .replace(r#"["b","b","b","id_1"]"#, "")
            .replace(r#"["b","b","a","id_0"],"#, r#"["b","b","a","id_0"]"#);
        assert!(matches!(parse_spec(&missing), Err(SpecError::SchemaViolation(m)) if m.contains("missing (b, b, b)")));
        let twice = CHAIN.replace(r#"["a","a","1"],"#, r#"["a","a","1"],["a","a","1"],"#);
        assert!(matches!(parse_spec(&twice), Err(SpecError::SchemaViolation(m)) if m.contains("twice")));
    }

    #[test]
    fn wrong_version_is_rejected() {
        let v2 = CHAIN.replace("\"enrichkit-spec\": 1", "\"enrichkit-spec\": 2");
        assert!(matches!(parse_spec(&v2), Err(SpecError::SchemaViolation(_))));
    }
}
