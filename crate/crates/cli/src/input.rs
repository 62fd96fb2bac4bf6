use std::fs;
use std::io::Read;

use circarc::circle::ArcFamily;
use circarc::generators::{generate, FamilyName, FamilySpec, Generated};
use circarc::graph::UnitGraph;
use circarc::Error;

/// A parsed input file: an arc family or a bare graph.
pub enum Input {
    Family(ArcFamily),
    Graph(UnitGraph),
}

impl Input {
    /// The graph itself, or the intersection graph of the family.
    pub fn graph(&self) -> UnitGraph {
        match self {
            Input::Family(f) => circarc::intersection::build(f).graph,
            Input::Graph(g) => g.clone(),
        }
    }

    pub fn family(&self, verb: &str) -> Result<&ArcFamily, Error> {
        match self {
            Input::Family(f) => Ok(f),
            Input::Graph(_) => Err(Error::Invalid(format!("{verb} needs an arc family, got an edge list"))),
        }
    }
}

impl From<Generated> for Input {
    fn from(g: Generated) -> Self {
        match g {
            Generated::Family(f) => Input::Family(f),
            Generated::Graph(g) => Input::Graph(g),
        }
    }
}

/// An edge list starts with a line holding only the vertex count.
pub fn parse(text: &str) -> Result<Input, Error> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(l) if l.parse::<usize>().is_ok() => text.parse().map(Input::Graph),
        _ => text.parse().map(Input::Family),
    }
}

/// `gen:NAME,key=value,...`
pub fn parse_inline(spec: &str, seed: u64) -> Result<FamilySpec, Error> {
    let mut parts = spec.split(',');
    let name: FamilyName = parts.next().unwrap_or("").parse()?;
    let mut out = FamilySpec::new(name);
    out.seed = seed;
    for kv in parts {
        let (k, v) = split_param(kv)?;
        out = out.param(k, v);
    }
    Ok(out)
}

pub fn split_param(kv: &str) -> Result<(&str, &str), Error> {
    kv.split_once('=')
        .ok_or_else(|| Error::Param(format!("expected key=value, got {kv:?}")))
}

/// Reads `-` from stdin, `gen:...` as an inline generator spec, anything
/// else as a path.
pub fn load(arg: &str, seed: u64) -> Result<Input, Error> {
    if let Some(spec) = arg.strip_prefix("gen:") {
        return generate(&parse_inline(spec, seed)?).map(Input::from);
    }
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Invalid(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(arg).map_err(|e| Error::Invalid(format!("{arg}: {e}")))?
    };
    parse(&text)
}
