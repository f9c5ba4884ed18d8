//! The --graph mini-language: `cycle:n`, `path:n`, `complete:n`,
//! `edgeless:n`, `c5hat`, `paley:q`, `petersen:m,j`, `tree:h,m`,
//! `joinalong:<base>;<block>,<block>,...`, `g6:<string>`.

use anyhow::{anyhow, bail, Context, Result};
use metamour_core::constructions::{
    c5hat, generalized_petersen, join_along, mary_tree, paley, primitive, Primitive,
};
use metamour_core::trees::TreeCoord;
use metamour_core::Graph;

use crate::graph6::decode_graph6;

pub fn parse_graph_spec(spec: &str) -> Result<Graph> {
    if spec == "c5hat" {
        return Ok(c5hat());
    }
    if let Some(g6) = spec.strip_prefix("g6:") {
        return decode_graph6(g6);
    }
    if let Some(rest) = spec.strip_prefix("joinalong:") {
        let (base_spec, block_specs) = rest
            .split_once(';')
            .ok_or_else(|| anyhow!("joinalong needs `<base>;<block>,...`, got `{rest}`"))?;
        let base = parse_graph_spec(base_spec)
            .with_context(|| format!("joinalong base `{base_spec}`"))?;
        let blocks: Vec<Graph> = split_blocks(block_specs)
            .iter()
            .map(|b| parse_graph_spec(b).with_context(|| format!("joinalong block `{b}`")))
            .collect::<Result<_>>()?;
        return Ok(join_along(&base, &blocks)?);
    }
    let (kind, args) = spec
        .split_once(':')
        .ok_or_else(|| anyhow!("unknown graph spec `{spec}`"))?;
    let nums: Vec<usize> = args
        .split(',')
        .map(|a| {
            a.parse::<usize>()
                .map_err(|_| anyhow!("`{a}` is not a number in spec `{spec}`"))
        })
        .collect::<Result<_>>()?;
    let arity_error = || anyhow!("wrong number of parameters in spec `{spec}`");
    let one = || nums.first().copied().ok_or_else(arity_error);
    match kind {
        "cycle" | "path" | "complete" | "edgeless" => {
            if nums.len() != 1 {
                return Err(arity_error());
            }
            let prim = match kind {
                "cycle" => Primitive::Cycle,
                "path" => Primitive::Path,
                "complete" => Primitive::Complete,
                _ => Primitive::Edgeless,
            };
            Ok(primitive(prim, one()?)?)
        }
        "paley" => {
            if nums.len() != 1 {
                return Err(arity_error());
            }
            Ok(paley(one()? as u64)?)
        }
        "petersen" => {
            if nums.len() != 2 {
                return Err(arity_error());
            }
            Ok(generalized_petersen(nums[0], nums[1])?)
        }
        "tree" => {
            if nums.len() != 2 {
                return Err(arity_error());
            }
            Ok(mary_tree(nums[0] as u32, nums[1])?)
        }
        _ => bail!("unknown graph spec `{spec}`"),
    }
}

/// Split a comma-separated block list, re-joining the two-parameter specs
/// (`petersen:m,j`, `tree:h,m`) whose own comma is part of the spec.
pub fn split_blocks(list: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut tokens = list.split(',').peekable();
    while let Some(tok) = tokens.next() {
        if (tok.starts_with("petersen:") || tok.starts_with("tree:")) && tokens.peek().is_some() {
            out.push(format!("{tok},{}", tokens.next().unwrap()));
        } else {
            out.push(tok.to_string());
        }
    }
    out
}

/// Family vertex labels where the construction has documented names:
/// exterior/interior labels v_i/u_i for generalized Petersen graphs and
/// root-path labels for trees.
pub fn family_labels(spec: &str, g: &Graph) -> Option<Vec<String>> {
    if let Some(args) = spec.strip_prefix("petersen:") {
        let m: usize = args.split(',').next()?.parse().ok()?;
        if g.n() != 2 * m {
            return None;
        }
        return Some(
            (0..m)
                .map(|i| format!("v{i}"))
                .chain((0..m).map(|i| format!("u{i}")))
                .collect(),
        );
    }
    if let Some(args) = spec.strip_prefix("tree:") {
        let m: usize = args.split(',').nth(1)?.parse().ok()?;
        return Some(
            (0..g.n())
                .map(|v| {
                    let path = TreeCoord::from_id(v, m).path;
                    if path.is_empty() {
                        "r".to_string()
                    } else {
                        let digits: Vec<String> = path.iter().map(|c| c.to_string()).collect();
                        format!("r.{}", digits.join("."))
                    }
                })
                .collect(),
        );
    }
    None
}
