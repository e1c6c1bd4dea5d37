//! Graph inputs: an edge-list file or a generator spec such as `kbip:3,3`.

use std::fs;
use std::path::Path;

use cfcolor::format::parse_edge_list;
use cfcolor::generators;
use cfcolor::Graph;

use crate::CliError;

pub const GENERATOR_HELP: &str = "path:N, cycle:N, star:LEAVES, complete:N, kbip:N,M, petersen, \
     prufer:A,B,..., tree:N, gnp:N,P, random-bipartite:NX,NY,P (random ones use --seed)";

pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn numbers<T: std::str::FromStr>(spec: &str, args: &str, want: usize) -> Result<Vec<T>, CliError> {
    let parsed: Result<Vec<T>, _> = args.split(',').map(|s| s.trim().parse()).collect();
    match parsed {
        Ok(v) if v.len() == want => Ok(v),
        _ => Err(CliError::input(format!("bad generator arguments in {spec:?}"))),
    }
}

fn probability(spec: &str, s: &str) -> Result<f64, CliError> {
    match s.trim().parse::<f64>() {
        Ok(p) if (0.0..=1.0).contains(&p) => Ok(p),
        _ => Err(CliError::input(format!("bad probability in {spec:?}"))),
    }
}

pub fn generate(spec: &str, seed: u64) -> Result<Graph, CliError> {
    let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
    let gen_err = |e: generators::GenError| CliError::input(e.to_string());
    let g = match name {
        "path" => generators::path(numbers(spec, args, 1)?[0]).map_err(gen_err)?,
        "cycle" => generators::cycle(numbers(spec, args, 1)?[0]).map_err(gen_err)?,
        "star" => generators::star(numbers(spec, args, 1)?[0]).map_err(gen_err)?,
        "complete" => generators::complete(numbers(spec, args, 1)?[0]).map_err(gen_err)?,
        "kbip" => {
            let v: Vec<usize> = numbers(spec, args, 2)?;
            generators::complete_bipartite(v[0], v[1]).map_err(gen_err)?
        }
        "petersen" => generators::petersen(),
        "prufer" => {
            let code: Vec<usize> = if args.is_empty() {
                Vec::new()
            } else {
                numbers(spec, args, args.split(',').count())?
            };
            if code.iter().any(|&c| c >= code.len() + 2) {
                return Err(CliError::input(format!("Prüfer entries must be below {}", code.len() + 2)));
            }
            generators::tree_from_prufer(&code)
        }
        "tree" => generators::random_tree(numbers(spec, args, 1)?[0], seed).map_err(gen_err)?,
        "gnp" => {
            let (n, p) = args
                .split_once(',')
                .ok_or_else(|| CliError::input(format!("bad generator arguments in {spec:?}")))?;
            let n: usize = numbers(spec, n, 1)?[0];
            generators::random_gnp(n, probability(spec, p)?, seed)
        }
        "random-bipartite" => {
            let parts: Vec<&str> = args.split(',').collect();
            if parts.len() != 3 {
                return Err(CliError::input(format!("bad generator arguments in {spec:?}")));
            }
            let nx: usize = numbers(spec, parts[0], 1)?[0];
            let ny: usize = numbers(spec, parts[1], 1)?[0];
            generators::random_bipartite(nx, ny, probability(spec, parts[2])?, seed)
        }
        _ => {
            return Err(CliError::input(format!(
                "unknown generator {name:?}; expected one of {GENERATOR_HELP}"
            )))
        }
    };
    Ok(g)
}
