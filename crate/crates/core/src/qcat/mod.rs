//! Typed sets, relations, enriched categories and functors over a finite quantaloid.

mod category;
mod qset;
mod relation;

pub use category::{
    check_adjunction, check_functor, check_graph_cograph, cograph, functor_leq, graph,
    is_adjunction, is_distributor, is_functor, type_preserving_maps, QCategory,
};
pub use qset::{validate_qset, validate_qset_map};
pub use relation::{
    all_relations, compose_rel, identity_rel, imp_left, imp_right, QRelation, TypedSet,
};
