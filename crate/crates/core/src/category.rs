//! The abstract interfaces shared by finite tables and computable carriers.
//!
//! Every structure in this crate is strict: associativity and unit laws of
//! tensor products and actions hold as equalities of objects and morphisms,
//! so none of the traits below carry associator or unitor data.

use alloc::vec::Vec;
use core::fmt::Debug;

/// A category whose morphisms know their endpoints.
pub trait Category {
    type Ob: Clone + PartialEq + Debug;
    type Mor: Clone + PartialEq + Debug;

    fn dom(&self, f: &Self::Mor) -> Self::Ob;
    fn cod(&self, f: &Self::Mor) -> Self::Ob;
    fn identity(&self, x: &Self::Ob) -> Self::Mor;
    /// `g ∘ f`, or `None` when `cod f != dom g`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Option<Self::Mor>;

    fn is_hom(&self, f: &Self::Mor, dom: &Self::Ob, cod: &Self::Ob) -> bool {
        self.dom(f) == *dom && self.cod(f) == *cod
    }

    /// Composite of a path given in diagrammatic order reversed: `then(g, f) = g ∘ f`.
    ///
    /// Panics when the pair is not composable; callers typecheck first.
    fn then(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor {
        self.compose(g, f)
            .unwrap_or_else(|| panic!("composite of non-composable pair {g:?} ∘ {f:?}"))
    }
}

/// A category small enough to list.
pub trait Finite: Category {
    fn objects(&self) -> Vec<Self::Ob>;
    fn morphisms(&self) -> Vec<Self::Mor>;
    /// Morphisms `x → y` in declaration order.
    fn hom_set(&self, x: &Self::Ob, y: &Self::Ob) -> Vec<Self::Mor>;

    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor> {
        let (x, y) = (self.dom(f), self.cod(f));
        self.hom_set(&y, &x)
            .into_iter()
            .find(|g| self.compose(g, f) == Some(self.identity(&x)) && self.compose(f, g) == Some(self.identity(&y)))
    }
}

/// A strict monoidal category.
pub trait Monoidal: Category {
    fn unit(&self) -> Self::Ob;
    fn tensor_ob(&self, a: &Self::Ob, b: &Self::Ob) -> Self::Ob;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
}

/// A category with a strict, unital left action of a monoidal base.
pub trait LeftModule: Category {
    type Base: Monoidal;

    fn base(&self) -> &Self::Base;
    fn act_ob(&self, m: &Ob<Self::Base>, b: &Self::Ob) -> Self::Ob;
    fn act_mor(&self, f: &Mor<Self::Base>, g: &Self::Mor) -> Self::Mor;
}

/// A category enriched in a strict monoidal base, with objects `0..object_count()`.
pub trait Enriched {
    type Base: Monoidal;

    fn base(&self) -> &Self::Base;
    fn object_names(&self) -> &[alloc::string::String];
    fn object_count(&self) -> usize {
        self.object_names().len()
    }
    fn hom(&self, x: usize, y: usize) -> Ob<Self::Base>;
    /// The identity element `𝟏 → hom(x, x)`.
    fn unit(&self, x: usize) -> Mor<Self::Base>;
    /// Composition `hom(y, z) ⊗ hom(x, y) → hom(x, z)`.
    fn comp(&self, x: usize, y: usize, z: usize) -> Mor<Self::Base>;
}

/// Finite colimits, enough to build weighted colimits as coequalizers of coproducts.
pub trait Cocomplete: Category {
    /// Coproduct apex together with the injections, in the order of `parts`.
    fn coproduct(&self, parts: &[Self::Ob]) -> (Self::Ob, Vec<Self::Mor>);
    /// The map out of a coproduct whose restriction to summand `i` is `legs[i]`.
    fn copair(&self, apex: &Self::Ob, legs: &[Self::Mor]) -> Self::Mor;
    /// Coequalizer of a parallel pair: apex and the canonical projection.
    fn coequalizer(&self, f: &Self::Mor, g: &Self::Mor) -> (Self::Ob, Self::Mor);
    /// The unique `m` with `m ∘ proj = h`, if one exists. `proj` must be a coequalizer projection.
    fn descend(&self, proj: &Self::Mor, h: &Self::Mor) -> Option<Self::Mor>;
    fn jointly_surjective(&self, legs: &[Self::Mor], apex: &Self::Ob) -> bool;
    fn invert(&self, f: &Self::Mor) -> Option<Self::Mor>;
    /// Number of underlying elements; bounds colimit constructions.
    fn size(&self, x: &Self::Ob) -> usize;
}

pub type Ob<C> = <C as Category>::Ob;
pub type Mor<C> = <C as Category>::Mor;
