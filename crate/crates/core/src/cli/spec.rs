//! Inline graph specifications such as `path:5`, `F:2` or `g6:Bw`.

use crate::constructions::{
    construct_f, construct_h, standard_family, Family, LabeledConstruction,
};
use crate::error::{Error, Result};
use crate::format::parse_graph6;

/// Resolves `name:params` into a labeled graph. Besides the standard
/// families this accepts `F:k`, `H:k` and `g6:<graph6>`.
pub fn resolve(spec: &str) -> Result<LabeledConstruction> {
    let (name, params) = spec
        .split_once(':')
        .ok_or_else(|| Error::BadParams(format!("expected `name:params`, got `{spec}`")))?;
    let k = || -> Result<usize> {
        params
            .parse()
            .map_err(|_| Error::BadParams(format!("`{params}` is not a valid k")))
    };
    match name {
        "F" | "f" => construct_f(k()?),
        "H" | "h" => construct_h(k()?),
        "g6" | "graph6" => Ok(plain(parse_graph6(params)?)),
        _ => Ok(plain(standard_family(spec.parse::<Family>()?)?)),
    }
}

/// Same as [`resolve`] for whitespace-separated tokens: `["grid", "3", "4"]`
/// means `grid:3,4`.
pub fn resolve_tokens(tokens: &[String]) -> Result<LabeledConstruction> {
    match tokens {
        [] => Err(Error::BadParams("empty construction".into())),
        [one] => resolve(one),
        [name, params @ ..] => resolve(&format!("{name}:{}", params.join(","))),
    }
}

pub fn plain(graph: crate::graph::Graph) -> LabeledConstruction {
    let labels = (0..graph.vertex_count()).map(|v| v.to_string()).collect();
    LabeledConstruction { graph, labels }
}
