//! Picking one vertex per connected component.

use crate::graph::VertexSet;
use crate::walk::ComponentPartition;

/// True iff the component map sends `reps` bijectively onto `components`.
pub fn represents(reps: VertexSet, components: &[usize], partition: &ComponentPartition) -> bool {
    let mut hit = vec![false; partition.len()];
    for v in reps {
        match partition.component_of(v) {
            // a second rep in the same component breaks injectivity
            Some(c) if !hit[c] => hit[c] = true,
            _ => return false,
        }
    }
    let mut target = vec![false; partition.len()];
    for &c in components {
        match target.get_mut(c) {
            Some(slot) => *slot = true,
            None => return false,
        }
    }
    hit == target
}

/// Per-component formulation of [`represents`]: every target component holds
/// exactly one rep and every other component holds none.
pub fn represents_per_component(
    reps: VertexSet,
    components: &[usize],
    partition: &ComponentPartition,
) -> bool {
    if !reps.is_subset(partition.vertices()) {
        return false;
    }
    (0..partition.len()).all(|c| {
        let here = reps.intersection(partition.component(c)).len();
        if components.contains(&c) {
            here == 1
        } else {
            here == 0
        }
    })
}

/// The minimum vertex of each listed component.
pub fn choose_representatives(components: &[usize], partition: &ComponentPartition) -> VertexSet {
    components
        .iter()
        .map(|&c| {
            partition
                .component(c)
                .first()
                .expect("components are nonempty")
        })
        .collect()
}
