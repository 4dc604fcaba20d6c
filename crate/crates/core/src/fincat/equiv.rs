//! Equivalence checking: fully faithful plus essentially surjective, by
//! exhaustive hom-set comparison and isomorphism search.

use super::{FinCategory, FinFunctor, MorId, ObjId};

/// Verdicts with witnesses for the equivalence test of a functor.
#[derive(Debug, Clone, Default, serde::Serialize)]
pub struct EquivalenceReport {
    pub faithful: bool,
    pub full: bool,
    pub essentially_surjective: bool,
    /// Pairs of distinct morphisms identified by the functor.
    pub faithful_failures: Vec<String>,
    /// Target morphisms with no preimage between image objects.
    pub full_failures: Vec<String>,
    /// Target objects isomorphic to no image object.
    pub surjective_failures: Vec<String>,
}

impl EquivalenceReport {
    pub fn is_equivalence(&self) -> bool {
        self.faithful && self.full && self.essentially_surjective
    }
}

/// Searches for a pair of mutually inverse morphisms between two objects.
pub fn find_isomorphism(cat: &FinCategory, a: ObjId, b: ObjId) -> Option<(MorId, MorId)> {
    for &f in cat.hom(a, b) {
        for &g in cat.hom(b, a) {
            if cat.compose(g, f) == Some(cat.identity(a))
                && cat.compose(f, g) == Some(cat.identity(b))
            {
                return Some((f, g));
            }
        }
    }
    None
}

/// Checks whether `e` is an equivalence: hom-set bijections for every object
/// pair, and every target object isomorphic to some image object.
pub fn check_equivalence(e: &FinFunctor) -> EquivalenceReport {
    let mut report = EquivalenceReport {
        faithful: true,
        full: true,
        essentially_surjective: true,
        ..Default::default()
    };
    let (src, tgt) = (&e.source, &e.target);
    for a in 0..src.n_objects() {
        for b in 0..src.n_objects() {
            let (a, b) = (ObjId(a), ObjId(b));
            let dom_hom = src.hom(a, b);
            let img: Vec<MorId> = dom_hom.iter().map(|&m| e.on_mor(m)).collect();
            for i in 0..img.len() {
                for j in i + 1..img.len() {
                    if img[i] == img[j] {
                        report.faithful = false;
                        if report.faithful_failures.len() < 8 {
                            report.faithful_failures.push(format!(
                                "`{}` and `{}` have the same image `{}`",
                                src.mor_name(dom_hom[i]),
                                src.mor_name(dom_hom[j]),
                                tgt.mor_name(img[i])
                            ));
                        }
                    }
                }
            }
            for &t in tgt.hom(e.on_obj(a), e.on_obj(b)) {
                if !img.contains(&t) {
                    report.full = false;
                    if report.full_failures.len() < 8 {
                        report.full_failures.push(format!(
                            "`{}`: {} -> {} has no preimage",
                            tgt.mor_name(t),
                            src.obj_name(a),
                            src.obj_name(b)
                        ));
                    }
                }
            }
        }
    }
    for t in 0..tgt.n_objects() {
        let t = ObjId(t);
        let hit = (0..src.n_objects())
            .any(|a| find_isomorphism(tgt, e.on_obj(ObjId(a)), t).is_some());
        if !hit {
            report.essentially_surjective = false;
            if report.surjective_failures.len() < 8 {
                report
                    .surjective_failures
                    .push(format!("`{}` is isomorphic to no image object", tgt.obj_name(t)));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{discrete_category, finite_sets_fragment, FinFunctor};
    use std::sync::Arc;

    #[test]
    fn identity_functor_is_an_equivalence() {
        let cat = Arc::new(finite_sets_fragment(&[1, 2]));
        let report = check_equivalence(&FinFunctor::identity(cat));
        assert!(report.is_equivalence());
    }

    #[test]
    fn constant_functor_from_discrete_pair_fails_with_witness() {
        let src = Arc::new(discrete_category(2));
        let tgt = Arc::new(discrete_category(2));
        // collapse both objects onto object 0
        let e = FinFunctor::new(
            "const",
            src,
            tgt,
            vec![ObjId(0), ObjId(0)],
            vec![MorId(0), MorId(0)],
        );
        let report = check_equivalence(&e);
        assert!(!report.is_equivalence());
        // object 1 of the target is hit by nothing
        assert!(!report.essentially_surjective);
        assert!(!report.surjective_failures.is_empty());
    }
}
