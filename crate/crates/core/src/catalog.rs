//! Bundled labeled polytopes.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::polytope::LabeledPolytope;

/// Weighted projective plane with weights (1,1,2).
pub fn weighted_p2_112() -> LabeledPolytope {
    LabeledPolytope::from_small(
        2,
        &[&[0, 1], &[-2, -1], &[1, 0]],
        &[1, 1, 1],
        &[(0, 1), (2, 1), (0, 1)],
    )
    .expect("well-formed")
}

/// Weighted projective plane with weights (1,2,4): same triangle as
/// [`weighted_p2_112`] with labels (2,1,1).
pub fn weighted_p2_124() -> LabeledPolytope {
    LabeledPolytope::from_small(
        2,
        &[&[0, 1], &[-2, -1], &[1, 0]],
        &[2, 1, 1],
        &[(0, 1), (2, 1), (0, 1)],
    )
    .expect("well-formed")
}

/// The standard simplex `{ x_i >= 0, sum x_i <= 1 }` (smooth projective space).
pub fn projective_space(n: usize) -> LabeledPolytope {
    let mut normals: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    normals.push(vec![-1; n]);
    let refs: Vec<&[i64]> = normals.iter().map(Vec::as_slice).collect();
    let mut offsets = vec![(0, 1); n];
    offsets.push((1, 1));
    LabeledPolytope::from_small(n, &refs, &vec![1; n + 1], &offsets).expect("well-formed")
}

/// Unit square with all labels 1.
pub fn unit_square() -> LabeledPolytope {
    LabeledPolytope::from_small(
        2,
        &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]],
        &[1, 1, 1, 1],
        &[(0, 1), (1, 1), (0, 1), (1, 1)],
    )
    .expect("well-formed")
}

/// Square with labels (1,2,1,3): a product of the weighted projective
/// lines with weights (1,2) and (1,3).
pub fn labeled_square() -> LabeledPolytope {
    LabeledPolytope::from_small(
        2,
        &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]],
        &[1, 2, 1, 3],
        &[(0, 1), (2, 1), (0, 1), (3, 1)],
    )
    .expect("well-formed")
}

/// A square pyramid; its apex lies on four facets, so it is not simple.
pub fn square_pyramid() -> LabeledPolytope {
    LabeledPolytope::from_small(
        3,
        &[
            &[-1, 0, -1],
            &[1, 0, -1],
            &[0, -1, -1],
            &[0, 1, -1],
            &[0, 0, 1],
        ],
        &[1, 1, 1, 1, 1],
        &[(1, 1), (1, 1), (1, 1), (1, 1), (0, 1)],
    )
    .expect("well-formed")
}

/// Every valid bundled polytope with a short name.
pub fn all() -> Vec<(String, LabeledPolytope)> {
    let mut out = vec![
        (String::from("wp2-112"), weighted_p2_112()),
        (String::from("wp2-124"), weighted_p2_124()),
    ];
    for n in 1..=3 {
        out.push((format!("cp{n}"), projective_space(n)));
    }
    out.push((String::from("unit-square"), unit_square()));
    out.push((String::from("labeled-square"), labeled_square()));
    out
}
