//! Text formats. Points files: a count line, then one "x y" line per
//! point; `#` lines are comments. Tree files: a header naming source,
//! radius and mode, then one "<index> <dist|inf> <parent|-1>" line per
//! point in index order. Weighted distances carry 17 significant digits
//! so a serialized run reproduces byte-for-byte.

use anyhow::{bail, ensure, Context, Result};
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;
use udg::{Point, PointSet, ShortestPathTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Unweighted,
    Weighted,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Unweighted => "unweighted",
            Mode::Weighted => "weighted",
        })
    }
}

impl FromStr for Mode {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unweighted" => Ok(Mode::Unweighted),
            "weighted" => Ok(Mode::Weighted),
            other => bail!("unknown mode {other:?} (expected unweighted or weighted)"),
        }
    }
}

pub fn parse_points(text: &str) -> Result<PointSet> {
    let mut declared: Option<usize> = None;
    let mut points: Vec<Point> = Vec::new();
    for (lineno, raw) in text.lines().enumerate().map(|(i, l)| (i + 1, l)) {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some(n) = declared else {
            let n: usize = line
                .parse()
                .with_context(|| format!("line {lineno}: expected point count, got {line:?}"))?;
            declared = Some(n);
            points.reserve(n);
            continue;
        };
        ensure!(
            points.len() < n,
            "line {lineno}: more than the declared {n} points"
        );
        let fields: Vec<&str> = line.split_whitespace().collect();
        ensure!(
            fields.len() == 2,
            "line {lineno}: expected \"x y\", got {line:?}"
        );
        let x: f64 = fields[0]
            .parse()
            .with_context(|| format!("line {lineno}: bad x coordinate {:?}", fields[0]))?;
        let y: f64 = fields[1]
            .parse()
            .with_context(|| format!("line {lineno}: bad y coordinate {:?}", fields[1]))?;
        ensure!(
            x.is_finite() && y.is_finite(),
            "line {lineno}: coordinates must be finite"
        );
        points.push(Point::new(x, y));
    }
    let n = declared.context("missing point count line")?;
    ensure!(
        points.len() == n,
        "expected {n} points, found {}",
        points.len()
    );
    Ok(PointSet::new(points)?)
}

pub fn write_points(ps: &PointSet) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", ps.len());
    for p in ps.iter() {
        let _ = writeln!(out, "{} {}", p.x, p.y);
    }
    out
}

/// A serialized shortest path tree plus the parameters that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct TreeDoc {
    pub source: usize,
    pub radius: f64,
    pub mode: Mode,
    pub dist: Vec<f64>,
    pub parent: Vec<Option<usize>>,
}

impl TreeDoc {
    pub fn from_tree(tree: &ShortestPathTree, radius: f64, mode: Mode) -> TreeDoc {
        TreeDoc {
            source: tree.source,
            radius,
            mode,
            dist: tree.dist.clone(),
            parent: tree.parent.clone(),
        }
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "source {} radius {} mode {}",
            self.source, self.radius, self.mode
        );
        for (i, (&d, &p)) in self.dist.iter().zip(&self.parent).enumerate() {
            let parent = p.map_or(-1, |v| v as i64);
            if d.is_infinite() {
                let _ = writeln!(out, "{i} inf {parent}");
            } else {
                match self.mode {
                    Mode::Unweighted => {
                        let _ = writeln!(out, "{i} {d} {parent}");
                    }
                    Mode::Weighted => {
                        let _ = writeln!(out, "{i} {d:.16e} {parent}");
                    }
                }
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<TreeDoc> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        let (_, header) = lines.next().context("empty tree file")?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        ensure!(
            fields.len() == 6 && fields[0] == "source" && fields[2] == "radius" && fields[4] == "mode",
            "line 1: expected \"source <s> radius <r> mode <m>\", got {header:?}"
        );
        let source: usize = fields[1]
            .parse()
            .with_context(|| format!("line 1: bad source index {:?}", fields[1]))?;
        let radius: f64 = fields[3]
            .parse()
            .with_context(|| format!("line 1: bad radius {:?}", fields[3]))?;
        let mode: Mode = fields[5].parse().context("line 1")?;
        let mut dist = Vec::new();
        let mut parent = Vec::new();
        for (lineno, line) in lines {
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            ensure!(
                fields.len() == 3,
                "line {lineno}: expected \"<index> <dist|inf> <parent|-1>\", got {line:?}"
            );
            let index: usize = fields[0]
                .parse()
                .with_context(|| format!("line {lineno}: bad index {:?}", fields[0]))?;
            ensure!(
                index == dist.len(),
                "line {lineno}: expected index {}, got {index}",
                dist.len()
            );
            let d: f64 = if fields[1] == "inf" {
                f64::INFINITY
            } else {
                let d: f64 = fields[1]
                    .parse()
                    .with_context(|| format!("line {lineno}: bad distance {:?}", fields[1]))?;
                ensure!(d.is_finite(), "line {lineno}: distance must be finite or inf");
                d
            };
            let p: i64 = fields[2]
                .parse()
                .with_context(|| format!("line {lineno}: bad parent {:?}", fields[2]))?;
            ensure!(p >= -1, "line {lineno}: parent must be -1 or an index");
            dist.push(d);
            parent.push(if p < 0 { None } else { Some(p as usize) });
        }
        ensure!(!dist.is_empty(), "tree file has no point lines");
        ensure!(
            source < dist.len(),
            "source {source} out of range for {} points",
            dist.len()
        );
        for (i, &p) in parent.iter().enumerate() {
            if let Some(p) = p {
                ensure!(
                    p < dist.len(),
                    "point {i}: parent {p} out of range for {} points",
                    dist.len()
                );
            }
        }
        Ok(TreeDoc {
            source,
            radius,
            mode,
            dist,
            parent,
        })
    }
}
