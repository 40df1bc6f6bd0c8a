//! Standard example graphs used across tests and bundled with the CLI.
//!
//! The set spans genus 0 through 3, loops, parallel edges, and bridges:
//! a single loop, the digon, the theta graph in a planar and a toroidal
//! rotation, planar K4, bouquets of interleaved loop pairs, and the
//! dumbbell.

use std::collections::BTreeMap;

use crate::graph::{EdgeEnd, EmbeddedGraph};

fn build(
    vertices: &[&str],
    edges: &[(&str, &str, &str)],
    rotations: &[(&str, &[(&str, EdgeEnd)])],
) -> EmbeddedGraph {
    let vertices = vertices.iter().map(|s| s.to_string()).collect();
    let edges = edges
        .iter()
        .map(|(id, t, h)| (id.to_string(), t.to_string(), h.to_string()))
        .collect();
    let rotations: BTreeMap<String, Vec<(String, EdgeEnd)>> = rotations
        .iter()
        .map(|(v, darts)| {
            (
                v.to_string(),
                darts.iter().map(|(e, end)| (e.to_string(), *end)).collect(),
            )
        })
        .collect();
    EmbeddedGraph::build(vertices, edges, rotations).expect("corpus graph is valid")
}

use EdgeEnd::{Head, Tail};

/// One vertex with a single loop; embeds in the sphere (2 faces).
pub fn loop_graph() -> EmbeddedGraph {
    build(
        &["v"],
        &[("e", "v", "v")],
        &[("v", &[("e", Tail), ("e", Head)])],
    )
}

/// Two vertices joined by two parallel edges; planar.
pub fn digon() -> EmbeddedGraph {
    build(
        &["u", "v"],
        &[("e1", "u", "v"), ("e2", "u", "v")],
        &[
            ("u", &[("e1", Tail), ("e2", Tail)]),
            ("v", &[("e2", Head), ("e1", Head)]),
        ],
    )
}

/// Theta graph (two vertices, three parallel edges) with mirrored
/// rotations: planar, 3 faces.
pub fn theta_planar() -> EmbeddedGraph {
    build(
        &["u", "v"],
        &[("e1", "u", "v"), ("e2", "u", "v"), ("e3", "u", "v")],
        &[
            ("u", &[("e1", Tail), ("e2", Tail), ("e3", Tail)]),
            ("v", &[("e3", Head), ("e2", Head), ("e1", Head)]),
        ],
    )
}

/// Theta graph with aligned rotations: a single face, genus 1.
pub fn theta_twisted() -> EmbeddedGraph {
    build(
        &["u", "v"],
        &[("e1", "u", "v"), ("e2", "u", "v"), ("e3", "u", "v")],
        &[
            ("u", &[("e1", Tail), ("e2", Tail), ("e3", Tail)]),
            ("v", &[("e1", Head), ("e2", Head), ("e3", Head)]),
        ],
    )
}

/// Complete graph K4 with a planar (tetrahedral) rotation system.
pub fn k4_planar() -> EmbeddedGraph {
    build(
        &["1", "2", "3", "4"],
        &[
            ("e12", "1", "2"),
            ("e13", "1", "3"),
            ("e14", "1", "4"),
            ("e23", "2", "3"),
            ("e24", "2", "4"),
            ("e34", "3", "4"),
        ],
        &[
            ("1", &[("e12", Tail), ("e14", Tail), ("e13", Tail)]),
            ("2", &[("e23", Tail), ("e24", Tail), ("e12", Head)]),
            ("3", &[("e13", Head), ("e34", Tail), ("e23", Head)]),
            ("4", &[("e34", Head), ("e14", Head), ("e24", Head)]),
        ],
    )
}

/// Two loop vertices joined by a bridge; planar.
pub fn dumbbell() -> EmbeddedGraph {
    build(
        &["u", "v"],
        &[("a", "u", "u"), ("b", "v", "v"), ("c", "u", "v")],
        &[
            ("u", &[("a", Tail), ("a", Head), ("c", Tail)]),
            ("v", &[("c", Head), ("b", Tail), ("b", Head)]),
        ],
    )
}

/// One vertex with `2g` loops, consecutive pairs interleaved, realizing
/// genus `g` with a single face for `g >= 1`.
pub fn bouquet(g: usize) -> EmbeddedGraph {
    let vertices = vec!["v".to_string()];
    let mut edges = Vec::new();
    let mut rotation = Vec::new();
    for i in 0..g {
        let a = format!("a{}", i + 1);
        let b = format!("b{}", i + 1);
        edges.push((a.clone(), "v".to_string(), "v".to_string()));
        edges.push((b.clone(), "v".to_string(), "v".to_string()));
        rotation.push((a.clone(), Tail));
        rotation.push((b.clone(), Tail));
        rotation.push((a, Head));
        rotation.push((b, Head));
    }
    let mut rotations = BTreeMap::new();
    rotations.insert("v".to_string(), rotation);
    EmbeddedGraph::build(vertices, edges, rotations).expect("bouquet is valid")
}

/// Every corpus graph, for matrix-style tests.
pub fn all() -> Vec<EmbeddedGraph> {
    vec![
        loop_graph(),
        digon(),
        theta_planar(),
        theta_twisted(),
        k4_planar(),
        bouquet(0),
        bouquet(1),
        bouquet(2),
        dumbbell(),
    ]
}

/// The acceptance-matrix graphs with stable names.
pub fn matrix() -> Vec<(&'static str, EmbeddedGraph)> {
    vec![
        ("loop", loop_graph()),
        ("digon", digon()),
        ("theta-planar", theta_planar()),
        ("theta-twisted", theta_twisted()),
        ("k4", k4_planar()),
        ("bouquet-g1", bouquet(1)),
        ("bouquet-g2", bouquet(2)),
        ("dumbbell", dumbbell()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_genera() {
        assert_eq!(loop_graph().genus().unwrap(), 0);
        assert_eq!(digon().genus().unwrap(), 0);
        assert_eq!(theta_planar().genus().unwrap(), 0);
        assert_eq!(theta_twisted().genus().unwrap(), 1);
        assert_eq!(k4_planar().genus().unwrap(), 0);
        assert_eq!(dumbbell().genus().unwrap(), 0);
        for g in 0..=3 {
            assert_eq!(bouquet(g).genus().unwrap(), g as u64, "bouquet({g})");
        }
    }

    #[test]
    fn k4_has_four_triangular_faces() {
        let faces = k4_planar().trace_faces();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.len() == 3));
    }

    #[test]
    fn bouquet_face_counts() {
        assert_eq!(bouquet(0).face_count(), 1);
        for g in 1..=3 {
            assert_eq!(bouquet(g).face_count(), 1, "bouquet({g})");
        }
    }
}
