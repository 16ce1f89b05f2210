//! Text formats. All ids are 0-based and lines starting with `#` are
//! ignored.
//!
//! * graph: `p dgp <n> <m>` followed by exactly `m` lines `e <u> <v>`
//! * partition: one block per line, ids separated by spaces
//! * rx3c instance: `p rx3c <q>` followed by lines `s <a> <b> <c>`

use dgp_core::reductions::Rx3cInstance;
use dgp_core::{Graph, Partition};

use crate::error::{CliError, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| (i, l.split_whitespace().collect()))
}

fn number(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| CliError::Parse(format!("line {line}: expected a non-negative integer, got {tok:?}")))
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    kind: &str,
    fields: usize,
) -> Result<Vec<usize>> {
    let Some((line, toks)) = lines.next() else {
        return Err(CliError::Parse(format!("missing header line \"p {kind} ...\"")));
    };
    if toks.len() != fields + 2 || toks[0] != "p" || toks[1] != kind {
        return Err(CliError::Parse(format!(
            "line {line}: expected header \"p {kind}\" with {fields} number(s), got {:?}",
            toks.join(" ")
        )));
    }
    toks[2..].iter().map(|t| number(line, t)).collect()
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let h = header(&mut lines, "dgp", 2)?;
    let (n, m) = (h[0], h[1]);
    let mut edges = Vec::with_capacity(m);
    for (line, toks) in lines {
        if toks.len() != 3 || toks[0] != "e" {
            return Err(CliError::Parse(format!(
                "line {line}: expected \"e <u> <v>\", got {:?}",
                toks.join(" ")
            )));
        }
        edges.push((number(line, toks[1])?, number(line, toks[2])?));
    }
    if edges.len() != m {
        return Err(CliError::Parse(format!(
            "header announces {m} edges but {} edge lines follow",
            edges.len()
        )));
    }
    Graph::from_edges(n, &edges).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p dgp {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

/// Parses a partition of `0..n`; overlapping or missing vertices are
/// rejected as an invalid partition.
pub fn parse_partition(text: &str, n: usize) -> Result<Partition> {
    let mut blocks = Vec::new();
    for (line, toks) in content_lines(text) {
        blocks.push(toks.iter().map(|t| number(line, t)).collect::<Result<Vec<_>>>()?);
    }
    Ok(Partition::new(n, blocks)?)
}

pub fn write_partition(p: &Partition) -> String {
    p.blocks()
        .iter()
        .map(|b| {
            let ids: Vec<String> = b.iter().map(|v| v.to_string()).collect();
            ids.join(" ") + "\n"
        })
        .collect()
}

pub fn parse_rx3c(text: &str) -> Result<Rx3cInstance> {
    let mut lines = content_lines(text);
    let q = header(&mut lines, "rx3c", 1)?[0];
    let mut sets = Vec::new();
    for (line, toks) in lines {
        if toks.len() != 4 || toks[0] != "s" {
            return Err(CliError::Parse(format!(
                "line {line}: expected \"s <a> <b> <c>\", got {:?}",
                toks.join(" ")
            )));
        }
        sets.push([number(line, toks[1])?, number(line, toks[2])?, number(line, toks[3])?]);
    }
    Ok(Rx3cInstance::new(q, sets)?)
}

pub fn write_rx3c(inst: &Rx3cInstance) -> String {
    let mut out = format!("p rx3c {}\n", inst.q());
    for s in inst.sets() {
        out.push_str(&format!("s {} {} {}\n", s[0], s[1], s[2]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = Graph::cycle(5).unwrap();
        let text = write_graph(&g);
        assert!(text.starts_with("p dgp 5 5\ne 0 1\n"));
        assert_eq!(parse_graph(&text).unwrap(), g);
        let commented = format!("# a comment\n\n{text}# trailing\n");
        assert_eq!(parse_graph(&commented).unwrap(), g);
    }

    #[test]
    fn graph_errors() {
        for bad in [
            "",
            "p dgp 3\n",
            "p graph 3 0\n",
            "p dgp 3 2\ne 0 1\n",
            "p dgp 3 1\ne 0 1\ne 1 2\n",
            "p dgp 3 1\ne 0 3\n",
            "p dgp 3 1\ne 1 1\n",
            "p dgp 3 2\ne 0 1\ne 1 0\n",
            "p dgp 3 1\nx 0 1\n",
            "p dgp 3 1\ne 0 -1\n",
        ] {
            assert!(matches!(parse_graph(bad), Err(CliError::Parse(_))), "{bad:?}");
        }
    }

    #[test]
    fn partition_round_trip() {
        let p = Partition::new(5, vec![vec![3, 4], vec![0, 1, 2]]).unwrap();
        let text = write_partition(&p);
        assert_eq!(text, "0 1 2\n3 4\n");
        assert_eq!(parse_partition(&text, 5).unwrap(), p);
        assert!(matches!(
            parse_partition("0 1\n1 2\n", 3),
            Err(CliError::Core(dgp_core::DgpError::InvalidPartition(_)))
        ));
    }

    #[test]
    fn rx3c_round_trip() {
        let text = "p rx3c 1\ns 0 1 2\ns 2 1 0\ns 0 1 2\n";
        let inst = parse_rx3c(text).unwrap();
        assert_eq!(inst.q(), 1);
        assert_eq!(write_rx3c(&inst), "p rx3c 1\ns 0 1 2\ns 0 1 2\ns 0 1 2\n");
        assert!(parse_rx3c("p rx3c 1\ns 0 1 2\n").is_err());
    }
}
