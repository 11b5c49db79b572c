//! Path algebras of finite quivers modulo homogeneous relations, graded by
//! path length.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Echelon, Field, GradedVectorSpace, Scalar, SparseVec};

use super::graded::GradedAlgebra;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Arrow {
    pub name: String,
    pub from: usize,
    pub to: usize,
}

/// One summand `coeff · path` of a relation; `path` lists arrow names in
/// traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationTerm {
    pub coeff: i64,
    pub path: Vec<String>,
}

/// JSON form of a quiver presentation. Vertices are numbered `1..=vertices`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverJson {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Vec<RelationTerm>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub field: Field,
    pub quiver: QuiverJson,
}

/// A path: either the trivial path at a vertex or a nonempty arrow list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Path {
    start: usize,
    end: usize,
    arrows: Vec<usize>,
}

impl QuiverPresentation {
    pub fn new(field: Field, quiver: QuiverJson) -> Result<Self> {
        let q = &quiver;
        if q.vertices == 0 {
            return Err(Error::InvalidQuiver("no vertices".into()));
        }
        for a in &q.arrows {
            if a.from == 0 || a.to == 0 || a.from > q.vertices || a.to > q.vertices {
                return Err(Error::InvalidQuiver(format!("arrow {} has an endpoint outside 1..={}", a.name, q.vertices)));
            }
        }
        let mut names: Vec<&str> = q.arrows.iter().map(|a| a.name.as_str()).collect();
        names.sort();
        names.dedup();
        if names.len() != q.arrows.len() {
            return Err(Error::InvalidQuiver("arrow names must be unique".into()));
        }
        let p = QuiverPresentation { field, quiver };
        for rel in &p.quiver.relations {
            p.relation_paths(rel)?;
        }
        Ok(p)
    }

    pub fn from_json(field: Field, json: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(json);
        let quiver: QuiverJson = serde_path_to_error::deserialize(de)
            .map_err(|e| Error::Schema { path: e.path().to_string(), message: e.inner().to_string() })?;
        QuiverPresentation::new(field, quiver)
    }

    fn arrow_index(&self, name: &str) -> Result<usize> {
        self.quiver
            .arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::InvalidQuiver(format!("unknown arrow {name}")))
    }

    /// `e{v}` names the trivial path at `v` unless an arrow has that name.
    fn trivial_path_vertex(&self, name: &str) -> Option<usize> {
        if self.quiver.arrows.iter().any(|a| a.name == name) {
            return None;
        }
        let v: usize = name.strip_prefix('e')?.parse().ok()?;
        (1..=self.quiver.vertices).contains(&v).then_some(v)
    }

    fn relation_paths(&self, rel: &[RelationTerm]) -> Result<Vec<(Scalar, Path)>> {
        if rel.is_empty() {
            return Err(Error::InvalidQuiver("empty relation".into()));
        }
        let mut out = Vec::new();
        for term in rel {
            if term.path.is_empty() {
                return Err(Error::InvalidQuiver("relation paths must be nonempty".into()));
            }
            if let [name] = term.path.as_slice() {
                if let Some(v) = self.trivial_path_vertex(name) {
                    out.push((self.field.from_i64(term.coeff), Path { start: v, end: v, arrows: vec![] }));
                    continue;
                }
            }
            let arrows = term.path.iter().map(|n| self.arrow_index(n)).collect::<Result<Vec<_>>>()?;
            for w in arrows.windows(2) {
                if self.quiver.arrows[w[0]].to != self.quiver.arrows[w[1]].from {
                    return Err(Error::InvalidQuiver(format!("path {} is not composable", term.path.join("*"))));
                }
            }
            let start = self.quiver.arrows[arrows[0]].from;
            let end = self.quiver.arrows[*arrows.last().unwrap()].to;
            out.push((self.field.from_i64(term.coeff), Path { start, end, arrows }));
        }
        if let Some((_, first)) = out.first() {
            if out.iter().any(|(_, p)| p.start != first.start || p.end != first.end) {
                return Err(Error::InvalidQuiver("relation terms must be parallel paths".into()));
            }
            if out.iter().any(|(_, p)| p.arrows.len() != first.arrows.len()) {
                return Err(Error::InvalidQuiver("relation terms must have equal length".into()));
            }
        }
        Ok(out)
    }

    fn paths_of_length(&self, len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = match len {
            0 => return (1..=self.quiver.vertices).map(|v| Path { start: v, end: v, arrows: vec![] }).collect(),
            1 => self.quiver.arrows.iter().enumerate().map(|(i, a)| Path { start: a.from, end: a.to, arrows: vec![i] }).collect(),
            _ => {
                let mut out = Vec::new();
                for p in self.paths_of_length(len - 1) {
                    for (i, a) in self.quiver.arrows.iter().enumerate() {
                        if a.from == p.end {
                            let mut arrows = p.arrows.clone();
                            arrows.push(i);
                            out.push(Path { start: p.start, end: a.to, arrows });
                        }
                    }
                }
                out
            }
        };
        out.sort();
        out
    }

    fn label(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e{}", p.start)
        } else {
            p.arrows.iter().map(|&a| self.quiver.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
        }
    }

    /// Path basis modulo the two-sided ideal generated by the relations, in
    /// lengths `≤ bound`. Complete when some length has zero quotient.
    pub fn realize(&self, bound: i64) -> Result<GradedAlgebra> {
        let f = &self.field;
        let rels: Vec<Vec<(Scalar, Path)>> =
            self.quiver.relations.iter().map(|r| self.relation_paths(r)).collect::<Result<_>>()?;
        let mut layers: Vec<(Vec<Path>, Echelon)> = Vec::new();
        let mut complete = false;
        for len in 0..=bound.max(0) as usize {
            let paths = self.paths_of_length(len);
            let pos = |p: &Path| paths.iter().position(|x| x == p).unwrap();
            let mut ideal = Echelon::new(f, paths.len());
            for rel in &rels {
                let rlen = rel[0].1.arrows.len();
                if rlen > len {
                    continue;
                }
                for lpad in 0..=len - rlen {
                    for (left, right) in self
                        .paths_of_length_ending(lpad, rel[0].1.start, true)
                        .into_iter()
                        .flat_map(|l| {
                            self.paths_of_length_ending(len - rlen - lpad, rel[0].1.end, false)
                                .into_iter()
                                .map(move |r| (l.clone(), r))
                        })
                    {
                        let mut terms = Vec::new();
                        for (c, p) in rel {
                            let mut arrows = left.arrows.clone();
                            arrows.extend(&p.arrows);
                            arrows.extend(&right.arrows);
                            let start = if lpad > 0 { left.start } else { p.start };
                            let end = if right.arrows.is_empty() { p.end } else { right.end };
                            terms.push((pos(&Path { start, end, arrows }), c.clone()));
                        }
                        ideal.insert(&SparseVec::from_entries(terms, f));
                    }
                }
            }
            let quotient_dim = paths.len() - ideal.dim();
            if len == 0 && quotient_dim < paths.len() {
                return Err(Error::RelationInconsistency);
            }
            layers.push((paths, ideal));
            if quotient_dim == 0 {
                complete = true;
                break;
            }
        }
        // basis: free columns per layer
        let mut basis: Vec<(usize, usize)> = Vec::new();
        for (len, (paths, ideal)) in layers.iter().enumerate() {
            let _ = paths;
            basis.extend(ideal.free_columns().into_iter().map(|c| (len, c)));
        }
        let n = basis.len();
        let coords = |len: usize, v: &SparseVec| -> SparseVec {
            let (_, ideal) = &layers[len];
            let r = ideal.reduce(v);
            r.reindex(f, |c| basis.iter().position(|&b| b == (len, c)))
        };
        let mut mult = Vec::with_capacity(n * n);
        for &(la, ca) in &basis {
            let pa = &layers[la].0[ca];
            for &(lb, cb) in &basis {
                let pb = &layers[lb].0[cb];
                let len = la + lb;
                if pa.end != pb.start || len >= layers.len() {
                    mult.push(SparseVec::new());
                    continue;
                }
                let prod = if pa.arrows.is_empty() {
                    pb.clone()
                } else if pb.arrows.is_empty() {
                    pa.clone()
                } else {
                    let mut arrows = pa.arrows.clone();
                    arrows.extend(&pb.arrows);
                    Path { start: pa.start, end: pb.end, arrows }
                };
                let paths = &layers[len].0;
                let idx = paths.iter().position(|x| *x == prod).unwrap();
                mult.push(coords(len, &SparseVec::unit(idx, f)));
            }
        }
        let nv = self.quiver.vertices;
        let unit = SparseVec::from_entries((0..nv).map(|i| (i, f.one())).collect(), f);
        let degrees = basis.iter().map(|&(l, _)| l as i64).collect();
        let labels = basis.iter().map(|&(l, c)| self.label(&layers[l].0[c])).collect();
        let augmentation = (nv == 1).then(|| SparseVec::unit(0, f));
        let generators: Vec<usize> = (0..n).filter(|&i| basis[i].0 <= 1).collect();
        Ok(GradedAlgebra {
            field: f.clone(),
            space: GradedVectorSpace { degrees, labels },
            mult,
            unit,
            augmentation,
            degree_bound: if complete { None } else { Some(bound) },
            generators,
            words: None,
        })
    }

    /// Paths of length `len` ending at (`ending`) or starting at vertex `v`.
    fn paths_of_length_ending(&self, len: usize, v: usize, ending: bool) -> Vec<Path> {
        self.paths_of_length(len)
            .into_iter()
            .filter(|p| if ending { p.end == v } else { p.start == v })
            .collect()
    }

    /// The preprojective algebra of type `A_n` with arrows `a{i}: i → i+1`
    /// and `b{i}: i+1 → i`. The relations kill the loop at each end and
    /// equate the two loops at every interior vertex.
    pub fn preprojective_a(field: &Field, n: usize) -> Result<Self> {
        let mut arrows = Vec::new();
        for i in 1..n {
            arrows.push(Arrow { name: format!("a{i}"), from: i, to: i + 1 });
            arrows.push(Arrow { name: format!("b{i}"), from: i + 1, to: i });
        }
        let t = |c: i64, p: &[String]| RelationTerm { coeff: c, path: p.to_vec() };
        let mut relations = Vec::new();
        if n >= 2 {
            relations.push(vec![t(1, &["a1".to_string(), "b1".to_string()])]);
            let m = n - 1;
            relations.push(vec![t(1, &[format!("b{m}"), format!("a{m}")])]);
            for i in 1..m {
                // loops at vertex i+1: down-and-back equals up-and-back
                relations.push(vec![
                    t(1, &[format!("b{i}"), format!("a{i}")]),
                    t(-1, &[format!("a{}", i + 1), format!("b{}", i + 1)]),
                ]);
            }
        }
        QuiverPresentation::new(field.clone(), QuiverJson { vertices: n, arrows, relations })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2_json() -> &'static str {
        r#"{"vertices": 2,
            "arrows": [{"name": "a1", "from": 1, "to": 2}, {"name": "b1", "from": 2, "to": 1}],
            "relations": [[{"coeff": 1, "path": ["a1", "b1"]}], [{"coeff": 1, "path": ["b1", "a1"]}]]}"#
    }

    #[test]
    fn preprojective_a2_has_four_basis_paths() {
        let q = QuiverPresentation::from_json(Field::prime(3).unwrap(), a2_json()).unwrap();
        let a = q.realize(6).unwrap();
        assert_eq!(a.space.labels, vec!["e1", "e2", "a1", "b1"]);
        assert_eq!(a.degree_bound, None);
        assert_eq!(a.check(), None);
    }

    /// Independent count: a path survives modulo monomial relations exactly
    /// when it contains none of them as a subword.
    #[test]
    fn monomial_relations_match_subword_enumeration() {
        let json = r#"{"vertices": 1,
            "arrows": [{"name": "x", "from": 1, "to": 1}, {"name": "y", "from": 1, "to": 1}],
            "relations": [[{"coeff": 1, "path": ["x", "y", "x"]}], [{"coeff": 1, "path": ["y", "y"]}]]}"#;
        let q = QuiverPresentation::from_json(Field::rationals(), json).unwrap();
        let a = q.realize(5).unwrap();
        for len in 0..=5 {
            let mut count = 0;
            for w in 0..(1u32 << len) {
                let s: String = (0..len).map(|i| if w >> i & 1 == 1 { 'y' } else { 'x' }).collect();
                if !s.contains("xyx") && !s.contains("yy") {
                    count += 1;
                }
            }
            assert_eq!(a.space.dim_in(len as i64), count, "length {len}");
        }
        assert_eq!(a.check(), None);
    }

    #[test]
    fn unit_killing_relations_are_inconsistent() {
        let json = r#"{"vertices": 1, "arrows": [{"name": "x", "from": 1, "to": 1}],
            "relations": [[{"coeff": 1, "path": ["x"]}]]}"#;
        let q = QuiverPresentation::from_json(Field::rationals(), json).unwrap();
        assert_eq!(q.realize(3).unwrap().dim(), 1);
        let json = r#"{"vertices": 1, "arrows": [{"name": "x", "from": 1, "to": 1}],
            "relations": [[{"coeff": 1, "path": ["e1"]}]]}"#;
        let q = QuiverPresentation::from_json(Field::rationals(), json).unwrap();
        assert!(matches!(q.realize(3), Err(Error::RelationInconsistency)));
    }

    #[test]
    fn rejects_non_parallel_relations() {
        let json = r#"{"vertices": 2,
            "arrows": [{"name": "a", "from": 1, "to": 2}, {"name": "b", "from": 2, "to": 1}],
            "relations": [[{"coeff": 1, "path": ["a"]}, {"coeff": 1, "path": ["b"]}]]}"#;
        assert!(matches!(QuiverPresentation::from_json(Field::rationals(), json), Err(Error::InvalidQuiver(_))));
    }

    #[test]
    fn unknown_fields_are_schema_errors() {
        let json = r#"{"vertices": 1, "arrows": [], "relations": [], "extra": 1}"#;
        assert!(matches!(QuiverPresentation::from_json(Field::rationals(), json), Err(Error::Schema { .. })));
    }

    #[test]
    fn preprojective_dimensions() {
        let f = Field::prime(5).unwrap();
        // Σ_{i,j} min(i, j, n+1-i, n+1-j)
        for n in 1..=4usize {
            let expected: usize = (1..=n)
                .flat_map(|i| (1..=n).map(move |j| i.min(j).min(n + 1 - i).min(n + 1 - j)))
                .sum();
            let a = QuiverPresentation::preprojective_a(&f, n).unwrap().realize(2 * n as i64).unwrap();
            assert_eq!(a.dim(), expected, "A_{n}");
            assert_eq!(a.degree_bound, None);
            assert_eq!(a.check(), None);
        }
    }
}
