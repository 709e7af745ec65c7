//! Equationally defined functions over Abelian l-groups, cancellative hoops
//! and perfect MV-algebras.

pub mod term;
pub mod geometry;
pub mod canon;
pub mod lattice;
pub mod models;
pub mod translate;
pub mod gen;
pub mod selftest;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/terms.md")]
    pub struct Terms;
    #[doc = include_str!("../../../book/src/canonical-forms.md")]
    pub struct CanonicalForms;
    #[doc = include_str!("../../../book/src/cones.md")]
    pub struct Cones;
    #[doc = include_str!("../../../book/src/models.md")]
    pub struct Models;
    #[doc = include_str!("../../../book/src/translations.md")]
    pub struct Translations;
    #[doc = include_str!("../../../book/src/classification.md")]
    pub struct Classification;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
