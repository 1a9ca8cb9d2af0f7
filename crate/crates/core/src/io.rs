//! JSON input for product graphs.
//!
//! Validation happens while the document is read, so duplicate ids, bad
//! orders and malformed edges are reported with the line and column where
//! they occur.

use std::collections::HashSet;
use std::fmt;
use std::path::Path;

use serde::de::{self, Deserialize, DeserializeSeed, Deserializer, MapAccess, SeqAccess, Visitor};
use thiserror::Error;

use crate::graph_model::{validate_id, AbelianProductGraph, GraphError, ProductGraph, VertexRecord};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// A parsed input file: cyclic labels, or abelian labels given as factor
/// lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphInput {
    Cyclic(ProductGraph),
    Abelian(AbelianProductGraph),
}

impl GraphInput {
    /// The cyclic product graph, expanding abelian labels.
    pub fn into_product_graph(self) -> ProductGraph {
        match self {
            GraphInput::Cyclic(g) => g,
            GraphInput::Abelian(a) => a.expand(),
        }
    }
}

enum Label {
    Cyclic(u32),
    Abelian(Vec<u32>),
}

struct Raw {
    vertices: Vec<(String, Label)>,
    edges: Vec<(String, String)>,
}

fn check_vertex<E: de::Error>(rec: VertexRecord, seen: &mut HashSet<String>) -> Result<(String, Label), E> {
    validate_id(&rec.id).map_err(E::custom)?;
    if !seen.insert(rec.id.clone()) {
        return Err(E::custom(GraphError::DuplicateVertex(rec.id)));
    }
    let label = match (rec.order, rec.orders) {
        (Some(o), None) => Label::Cyclic(o),
        (None, Some(os)) => Label::Abelian(os),
        _ => return Err(E::custom(format!("vertex {:?} needs exactly one of \"order\" or \"orders\"", rec.id))),
    };
    let bad = match &label {
        Label::Cyclic(o) => (*o < 2).then_some(*o),
        Label::Abelian(os) if os.is_empty() => return Err(E::custom(GraphError::NoFactors(rec.id))),
        Label::Abelian(os) => os.iter().copied().find(|&o| o < 2),
    };
    if let Some(order) = bad {
        return Err(E::custom(GraphError::InvalidOrder { id: rec.id, order: order.into() }));
    }
    Ok((rec.id, label))
}

// One vertex, checked as soon as its object closes so errors point at it.
struct VertexSeed<'a> {
    seen: &'a mut HashSet<String>,
}

impl<'de> DeserializeSeed<'de> for VertexSeed<'_> {
    type Value = (String, Label);

    fn deserialize<D: Deserializer<'de>>(self, d: D) -> Result<Self::Value, D::Error> {
        d.deserialize_map(self)
    }
}

impl<'de> Visitor<'de> for VertexSeed<'_> {
    type Value = (String, Label);

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a vertex object")
    }

    fn visit_map<A: MapAccess<'de>>(self, map: A) -> Result<Self::Value, A::Error> {
        let rec = VertexRecord::deserialize(de::value::MapAccessDeserializer::new(map))?;
        check_vertex(rec, self.seen)
    }
}

struct VerticesSeed;

impl<'de> DeserializeSeed<'de> for VerticesSeed {
    type Value = Vec<(String, Label)>;

    fn deserialize<D: Deserializer<'de>>(self, d: D) -> Result<Self::Value, D::Error> {
        d.deserialize_seq(self)
    }
}

impl<'de> Visitor<'de> for VerticesSeed {
    type Value = Vec<(String, Label)>;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a list of vertices")
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        while let Some(v) = seq.next_element_seed(VertexSeed { seen: &mut seen })? {
            out.push(v);
        }
        if out.is_empty() {
            return Err(de::Error::custom("the vertex list is empty"));
        }
        Ok(out)
    }
}

struct EdgeSeed<'a> {
    known: Option<&'a HashSet<String>>,
    seen: &'a mut HashSet<(String, String)>,
}

impl<'de> DeserializeSeed<'de> for EdgeSeed<'_> {
    type Value = (String, String);

    fn deserialize<D: Deserializer<'de>>(self, d: D) -> Result<Self::Value, D::Error> {
        d.deserialize_seq(self)
    }
}

impl<'de> Visitor<'de> for EdgeSeed<'_> {
    type Value = (String, String);

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an [id, id] pair")
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
        let a: String = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(0, &self))?;
        let b: String = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(1, &self))?;
        if seq.next_element::<de::IgnoredAny>()?.is_some() {
            return Err(de::Error::invalid_length(3, &self));
        }
        if let Some(known) = self.known {
            for x in [&a, &b] {
                if !known.contains(x) {
                    return Err(de::Error::custom(GraphError::UnknownVertex(x.clone())));
                }
            }
        }
        if a == b {
            return Err(de::Error::custom(GraphError::SelfLoop(a)));
        }
        let key = if a < b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        if !self.seen.insert(key) {
            return Err(de::Error::custom(GraphError::DuplicateEdge(a, b)));
        }
        Ok((a, b))
    }
}

struct EdgesSeed<'a> {
    known: Option<&'a HashSet<String>>,
}

impl<'de> DeserializeSeed<'de> for EdgesSeed<'_> {
    type Value = Vec<(String, String)>;

    fn deserialize<D: Deserializer<'de>>(self, d: D) -> Result<Self::Value, D::Error> {
        d.deserialize_seq(self)
    }
}

impl<'de> Visitor<'de> for EdgesSeed<'_> {
    type Value = Vec<(String, String)>;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a list of [id, id] pairs")
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        while let Some(e) = seq.next_element_seed(EdgeSeed { known: self.known, seen: &mut seen })? {
            out.push(e);
        }
        Ok(out)
    }
}

struct RawVisitor;

impl<'de> Visitor<'de> for RawVisitor {
    type Value = Raw;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an object with \"vertices\" and \"edges\"")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Raw, A::Error> {
        let mut vertices: Option<Vec<(String, Label)>> = None;
        let mut edges = None;
        let mut known: Option<HashSet<String>> = None;
        while let Some(key) = map.next_key::<String>()? {
            match key.as_str() {
                "vertices" if vertices.is_none() => {
                    let vs = map.next_value_seed(VerticesSeed)?;
                    known = Some(vs.iter().map(|(id, _)| id.clone()).collect());
                    vertices = Some(vs);
                }
                "edges" if edges.is_none() => edges = Some(map.next_value_seed(EdgesSeed { known: known.as_ref() })?),
                "vertices" | "edges" => return Err(de::Error::custom(format!("duplicate field {key:?}"))),
                _ => {
                    map.next_value::<de::IgnoredAny>()?;
                }
            }
        }
        let vertices = vertices.ok_or_else(|| de::Error::missing_field("vertices"))?;
        Ok(Raw { vertices, edges: edges.unwrap_or_default() })
    }
}

/// Parses either input format. Abelian input is recognised by any vertex
/// carrying `"orders"`; plain `"order"` entries in such a file count as a
/// single factor.
pub fn parse_graph(text: &str) -> Result<GraphInput, InputError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let raw = de.deserialize_map(RawVisitor)?;
    de.end()?;
    let abelian = raw.vertices.iter().any(|(_, l)| matches!(l, Label::Abelian(_)));
    if abelian {
        let vs = raw.vertices.into_iter().map(|(id, l)| match l {
            Label::Cyclic(o) => (id, vec![o]),
            Label::Abelian(os) => (id, os),
        });
        Ok(GraphInput::Abelian(AbelianProductGraph::new(vs, raw.edges)?))
    } else {
        let vs = raw.vertices.into_iter().map(|(id, l)| match l {
            Label::Cyclic(o) => (id, o),
            Label::Abelian(_) => unreachable!(),
        });
        Ok(GraphInput::Cyclic(ProductGraph::new(vs, raw.edges)?))
    }
}

/// Parses a graph and expands abelian labels.
pub fn parse_product_graph(text: &str) -> Result<ProductGraph, InputError> {
    parse_graph(text).map(GraphInput::into_product_graph)
}

pub fn read_text(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|source| InputError::Io { path: path.display().to_string(), source })
}

pub fn read_product_graph(path: &Path) -> Result<ProductGraph, InputError> {
    parse_product_graph(&read_text(path)?)
}
