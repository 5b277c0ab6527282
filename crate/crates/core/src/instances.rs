//! Small named instances used by the tests, the examples and the command line tool.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::category::Monoidal;
use crate::enriched::{MCat, RawMCat};
use crate::fincat::{validate_fincat, FinCat, RawCat};
use crate::mfunctor::MFunTT;
use crate::monoidal::MonStr;
use crate::tensored::LTensored;

/// Elements of the symmetric group on three letters, identity first.
pub const S3_NAMES: [&str; 6] = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"];

const S3_PERMS: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// Multiplication table of S3, `(p·q)(i) = p(q(i))`.
pub fn s3_table() -> Vec<usize> {
    let mut mul = Vec::with_capacity(36);
    for p in &S3_PERMS {
        for q in &S3_PERMS {
            let pq = [p[q[0]], p[q[1]], p[q[2]]];
            mul.push(S3_PERMS.iter().position(|r| *r == pq).expect("closed"));
        }
    }
    mul
}

fn cyclic(k: usize) -> Vec<usize> {
    (0..k * k).map(|i| (i / k + i % k) % k).collect()
}

pub fn s3_discrete() -> MonStr {
    MonStr::discrete_monoid(&names(&S3_NAMES), &s3_table()).expect("S3")
}

pub fn c3_discrete() -> MonStr {
    MonStr::discrete_monoid(&names(&["e", "r", "r2"]), &cyclic(3)).expect("C3")
}

/// C2 as a one-object monoidal category.
pub fn c2_one_object() -> MonStr {
    MonStr::one_object(&names(&["e", "g"]), &cyclic(2)).expect("C2")
}

/// The one-object, one-morphism monoidal category.
pub fn trivial_base() -> MonStr {
    MonStr::one_object(&names(&["e"]), &[0]).expect("trivial")
}

/// Builds an MCat whose composition and unit maps are forced, i.e. every relevant hom-set of the base is a singleton.
fn forced(base: MonStr, objects: &[&str], hom: Vec<usize>) -> MCat {
    let n = objects.len();
    let c = base.carrier().clone();
    let unit = (0..n).map(|x| c.hom(base.unit_object(), hom[x * n + x])[0]).collect();
    let mut comp = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let d = base.tensor_ob(&hom[y * n + z], &hom[x * n + y]);
                comp.push(c.hom(d, hom[x * n + z]).first().copied().unwrap_or(usize::MAX));
            }
        }
    }
    let raw = RawMCat {
        objects: names(objects),
        hom,
        unit,
        comp,
    };
    MCat::new(Arc::new(base), raw).expect("forced enriched category")
}

/// Objects `a ≤ b` enriched over the Boolean meet poset.
pub fn boolean_chain() -> MCat {
    forced(MonStr::boolean_and(), &["a", "b"], vec![1, 1, 0, 1])
}

pub fn s3_one_object() -> MCat {
    forced(s3_discrete(), &["*"], vec![0])
}

/// Two objects over discrete S3 with `hom(x, y) = hom(y, x) = (12)`.
pub fn s3_two_object() -> MCat {
    forced(s3_discrete(), &["x", "y"], vec![0, 1, 1, 0])
}

pub fn c3_one_object() -> MCat {
    forced(c3_discrete(), &["*"], vec![0])
}

/// One object over one-object C2, composition and unit `e`.
pub fn c2_one_object_mcat() -> MCat {
    let raw = RawMCat {
        objects: names(&["*"]),
        hom: vec![0],
        unit: vec![0],
        comp: vec![0],
    };
    MCat::new(Arc::new(c2_one_object()), raw).expect("C2 one object")
}

/// Two objects over one-object C2, every composition and unit `e`.
pub fn c2_two_object_mcat() -> MCat {
    let raw = RawMCat {
        objects: names(&["x", "y"]),
        hom: vec![0; 4],
        unit: vec![0; 2],
        comp: vec![0; 8],
    };
    MCat::new(Arc::new(c2_one_object()), raw).expect("C2 two objects")
}

/// The Boolean poset acting on the chain `0 ≤ 1 ≤ 2`: `1` fixes, `0` collapses to the bottom.
pub fn boolean_on_three_chain() -> LTensored {
    let chain = FinCat::preorder(&names(&["0", "1", "2"]), |i, j| i <= j).expect("chain");
    LTensored::thin(Arc::new(MonStr::boolean_and()), chain, |m, b| if m == 1 { b } else { 0 }).expect("action")
}

pub fn c2_identity_mfun_tt() -> MFunTT {
    MFunTT::identity(&LTensored::regular(Arc::new(c2_one_object())))
}

/// A one-object category over the trivial base and the monoid `{e, z}`, `z·z = z`, with the trivial action.
pub fn idempotent_counterexample() -> (MCat, LTensored) {
    let base = Arc::new(trivial_base());
    let raw = RawMCat {
        objects: names(&["*"]),
        hom: vec![0],
        unit: vec![0],
        comp: vec![0],
    };
    let a = MCat::new(base.clone(), raw).expect("trivial category");
    let carrier = FinCat::monoid("*", &names(&["e", "z"]), &[0, 1, 1, 1]).expect("idempotent monoid");
    let b = LTensored::new(base, carrier, vec![0], vec![0, 1]).expect("trivial action");
    (a, b)
}

/// `a → b`.
pub fn walking_arrow() -> FinCat {
    validate_fincat(&RawCat::new(&["a", "b"]).morphism("u", "a", "b")).expect("arrow")
}

/// `u, v: p → q`.
pub fn parallel_pair() -> FinCat {
    validate_fincat(&RawCat::new(&["p", "q"]).morphism("u", "p", "q").morphism("v", "p", "q")).expect("parallel pair")
}

/// C3 as a one-object category, described by names.
pub fn c3_raw() -> RawCat {
    let mut raw = RawCat::new(&["*"])
        .morphism("e", "*", "*")
        .morphism("r", "*", "*")
        .morphism("r2", "*", "*");
    raw.identities.push(("*".into(), "e".into()));
    let el = ["e", "r", "r2"];
    for g in 0..3 {
        for f in 0..3 {
            raw = raw.composite(el[g], el[f], el[(g + f) % 3]);
        }
    }
    raw
}

/// C3 with `r ∘ r` redirected to `e`, which breaks associativity but not the unit laws.
pub fn c3_corrupted() -> RawCat {
    let mut raw = c3_raw();
    for entry in raw.compose.iter_mut() {
        if entry.0 == "r" && entry.1 == "r" {
            entry.2 = "e".into();
        }
    }
    raw
}
