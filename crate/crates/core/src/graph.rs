//! Finite metric graphs with typed, genus-labelled vertices.

use std::fmt::Write as _;

use crate::line::{Length, Point, PointType};

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Point(Point),
    /// The point at infinity of the projective line.
    Infinity,
}

impl Node {
    pub fn point(&self) -> Option<&Point> {
        match self {
            Node::Point(p) => Some(p),
            Node::Infinity => None,
        }
    }

    fn label(&self) -> String {
        match self {
            Node::Point(p) => p.to_string(),
            Node::Infinity => "inf".to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SkeletonVertex {
    pub id: usize,
    pub node: Node,
    pub point_type: Option<PointType>,
    pub genus: u32,
    /// Sheet index when the vertex is one of several preimages in a cover.
    pub sheet: Option<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonEdge {
    pub u: usize,
    pub v: usize,
    pub length: Length,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SkeletonGraph {
    pub vertices: Vec<SkeletonVertex>,
    pub edges: Vec<SkeletonEdge>,
    pub marked: Vec<usize>,
}

impl SkeletonGraph {
    pub fn points(&self) -> impl Iterator<Item = &Point> {
        self.vertices.iter().filter_map(|v| v.node.point())
    }

    pub fn has_infinity(&self) -> bool {
        self.vertices.iter().any(|v| v.node == Node::Infinity)
    }

    /// Vertex id of a point, under semantic point equality.
    pub fn find(&self, p: &Point) -> Option<usize> {
        self.vertices.iter().find(|v| v.node.point() == Some(p)).map(|v| v.id)
    }

    pub fn degree(&self, id: usize) -> usize {
        self.edges.iter().filter(|e| e.u == id || e.v == id).count()
    }

    pub fn neighbours(&self, id: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |e| {
            if e.u == id {
                Some(e.v)
            } else if e.v == id {
                Some(e.u)
            } else {
                None
            }
        })
    }

    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        let mut components = self.vertices.len();
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// First Betti number `E - V + C`.
    pub fn betti(&self) -> usize {
        self.edges.len() + self.component_count() - self.vertices.len()
    }

    /// Graphviz DOT, vertices ordered by their printed point.
    pub fn to_dot(&self, name: &str) -> String {
        let mut order: Vec<usize> = (0..self.vertices.len()).collect();
        order.sort_by_key(|&i| (self.vertices[i].node.label(), self.vertices[i].sheet, i));
        let mut rank = vec![0; self.vertices.len()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        let mut out = String::new();
        writeln!(out, "graph {name} {{").unwrap();
        for &i in &order {
            let v = &self.vertices[i];
            let ty = v
                .point_type
                .map_or_else(|| "inf".to_string(), |t| t.number().to_string());
            let mut label = format!("type {ty}: {}", v.node.label());
            if let Some(k) = v.sheet {
                write!(label, " sheet={k}").unwrap();
            }
            if v.genus > 0 {
                write!(label, " g={}", v.genus).unwrap();
            }
            let marked = if self.marked.contains(&i) { ", shape=box" } else { "" };
            writeln!(out, "  n{} [label=\"{label}\"{marked}];", rank[i]).unwrap();
        }
        let mut edges: Vec<(usize, usize, String)> = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (rank[e.u].min(rank[e.v]), rank[e.u].max(rank[e.v]));
                (a, b, e.length.to_string())
            })
            .collect();
        edges.sort();
        for (a, b, len) in edges {
            writeln!(out, "  n{a} -- n{b} [len=\"{len}\"];").unwrap();
        }
        out.push_str("}\n");
        out
    }
}
