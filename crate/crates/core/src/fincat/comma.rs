//! Slice-style comma categories `F ↓ B` and `B ↓ F`, materialized as explicit
//! finite categories with their projection functor.

use super::{FinCategory, FinFunctor, MorData, MorId, ObjId};
use crate::{Error, Result};
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommaDirection {
    /// Objects are morphisms `F A -> B`.
    Over,
    /// Objects are morphisms `B -> F A`.
    Under,
}

/// A comma category over or under an anchor object, with its projection to
/// the functor's source.
#[derive(Debug, Clone)]
pub struct CommaCategory {
    pub category: Arc<FinCategory>,
    /// Per comma object: the source object `A` and the anchoring morphism.
    pub objects: Vec<(ObjId, MorId)>,
    pub projection: FinFunctor,
    pub anchor: ObjId,
    pub direction: CommaDirection,
}

/// Builds `F ↓ B`: objects are all `f: F A -> B`, morphisms `h: A -> A'`
/// with `f = f' ∘ F h`.
pub fn comma_category(f: &FinFunctor, anchor: ObjId) -> Result<CommaCategory> {
    build(f, anchor, CommaDirection::Over)
}

/// Builds `B ↓ F`: objects are all `f: B -> F A`, morphisms `h: A -> A'`
/// with `F h ∘ f = f'`.
pub fn coslice_category(f: &FinFunctor, anchor: ObjId) -> Result<CommaCategory> {
    build(f, anchor, CommaDirection::Under)
}

fn build(f: &FinFunctor, anchor: ObjId, direction: CommaDirection) -> Result<CommaCategory> {
    let src = &f.source;
    let tgt = &f.target;
    if anchor.0 >= tgt.n_objects() {
        return Err(Error::NoSuchObject {
            category: tgt.name.clone(),
            object: format!("#{}", anchor.0),
        });
    }
    let mut objects: Vec<(ObjId, MorId)> = Vec::new();
    for a in 0..src.n_objects() {
        let a = ObjId(a);
        let homs = match direction {
            CommaDirection::Over => tgt.hom(f.on_obj(a), anchor),
            CommaDirection::Under => tgt.hom(anchor, f.on_obj(a)),
        };
        for &m in homs {
            objects.push((a, m));
        }
    }
    let obj_names: Vec<String> = objects
        .iter()
        .map(|(a, m)| format!("({}, {})", src.obj_name(*a), tgt.mor_name(*m)))
        .collect();

    let mut morphisms: Vec<MorData> = Vec::new();
    let mut proj_mor: Vec<MorId> = Vec::new();
    let mut index: HashMap<(usize, usize, MorId), usize> = HashMap::new();
    for (i, &(a, fa)) in objects.iter().enumerate() {
        for (j, &(a2, fa2)) in objects.iter().enumerate() {
            for &h in src.hom(a, a2) {
                let fh = f.on_mor(h);
                let commutes = match direction {
                    CommaDirection::Over => tgt.compose(fa2, fh) == Some(fa),
                    CommaDirection::Under => tgt.compose(fh, fa) == Some(fa2),
                };
                if commutes {
                    index.insert((i, j, h), morphisms.len());
                    morphisms.push(MorData {
                        name: format!("{}:{}->{}", src.mor_name(h), i, j),
                        dom: ObjId(i),
                        cod: ObjId(j),
                    });
                    proj_mor.push(h);
                }
            }
        }
    }
    let identities: Vec<MorId> = objects
        .iter()
        .enumerate()
        .map(|(i, &(a, _))| MorId(index[&(i, i, src.identity(a))]))
        .collect();
    let mut compose = HashMap::new();
    for (g_idx, g) in morphisms.iter().enumerate() {
        for (f_idx, fm) in morphisms.iter().enumerate() {
            if fm.cod != g.dom {
                continue;
            }
            if let Some(h) = src.compose(proj_mor[g_idx], proj_mor[f_idx]) {
                if let Some(&c) = index.get(&(fm.dom.0, g.cod.0, h)) {
                    compose.insert((g_idx, f_idx), c);
                }
            }
        }
    }
    let category = Arc::new(FinCategory::from_table(
        &format!(
            "{}{}{}",
            f.name,
            match direction {
                CommaDirection::Over => "↓",
                CommaDirection::Under => "↑",
            },
            tgt.obj_name(anchor)
        ),
        obj_names,
        morphisms,
        identities,
        compose,
    ));
    let projection = FinFunctor::new(
        "π",
        category.clone(),
        f.source.clone(),
        objects.iter().map(|&(a, _)| a).collect(),
        proj_mor,
    );
    Ok(CommaCategory {
        category,
        objects,
        projection,
        anchor,
        direction,
    })
}
