use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::model::{Model, State};

/// Writes `n,k,xi,g` for every class and every node `k = 0..=K`, ghost
/// values included, in `(n, k)` order.
pub fn write_profile_csv(model: &Model, g: &State, path: impl AsRef<Path>) -> Result<()> {
    g.check_shape(model.n_max(), model.cells())?;
    let mut out = BufWriter::new(File::create(path)?);
    writeln!(out, "n,k,xi,g")?;
    let xi = model.grid().xi();
    for n in model.classes() {
        for (k, x) in xi.iter().enumerate() {
            writeln!(out, "{n},{k},{x:.16e},{:.16e}", g.value(n, k))?;
        }
    }
    out.flush()?;
    Ok(())
}

/// Reads a profile written by [`write_profile_csv`]; the shape is inferred
/// from the largest `n` and `k` present. Ghost rows are ignored.
pub fn read_profile_csv(path: impl AsRef<Path>) -> Result<State> {
    let mut reader = csv::Reader::from_path(path)?;
    let headers = reader.headers()?.clone();
    if headers.iter().collect::<Vec<_>>() != ["n", "k", "xi", "g"] {
        return Err(Error::Parse(format!("unexpected profile header {headers:?}")));
    }
    let mut rows = Vec::new();
    for rec in reader.records() {
        let rec = rec?;
        let field = |i: usize| rec.get(i).ok_or_else(|| Error::Parse(format!("short row {rec:?}")));
        let n: usize = field(0)?.parse().map_err(|_| Error::Parse(format!("bad class in {rec:?}")))?;
        let k: usize = field(1)?.parse().map_err(|_| Error::Parse(format!("bad index in {rec:?}")))?;
        let g: f64 = field(3)?.parse().map_err(|_| Error::Parse(format!("bad value in {rec:?}")))?;
        rows.push((n, k, g));
    }
    let n_max = rows.iter().map(|r| r.0).max().unwrap_or(0);
    let cells = rows.iter().map(|r| r.1).max().unwrap_or(0);
    if n_max < 2 || cells < 2 || rows.len() != (n_max - 1) * (cells + 1) {
        return Err(Error::Parse(format!("{} rows do not form a full profile", rows.len())));
    }
    let mut state = State::zeros(n_max, cells);
    for (n, k, g) in rows {
        if n < 2 {
            return Err(Error::Parse(format!("class {n} below 2")));
        }
        if (1..cells).contains(&k) {
            state.set(n, k, g);
        }
    }
    Ok(state)
}

/// Writes `n,X,Y,lnX` for `n = 2..=N`; `lnX` is empty where `X = 0`.
pub fn write_moments_csv(model: &Model, g: &State, path: impl AsRef<Path>) -> Result<()> {
    let mo = model.moments(g);
    let mut out = BufWriter::new(File::create(path)?);
    writeln!(out, "n,X,Y,lnX")?;
    for n in model.classes() {
        let (x, y) = (mo.x_at(n), mo.y_at(n));
        if x > 0.0 {
            writeln!(out, "{n},{x:.16e},{y:.16e},{:.16e}", x.ln())?;
        } else {
            writeln!(out, "{n},{x:.16e},{y:.16e},")?;
        }
    }
    out.flush()?;
    Ok(())
}
