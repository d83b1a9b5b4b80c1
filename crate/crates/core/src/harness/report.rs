use std::io::Write;

use crate::error::{Result, TGraphError};

use super::claims::ClaimInstance;

fn csv_err(e: csv::Error) -> TGraphError {
    TGraphError::Io(e.to_string())
}

/// Writes instances as CSV with columns
/// `claim_id,m,n,t,predicted,observed,status`. Single-generator bounds
/// leave `n` empty; a cell detail is appended to the id in parentheses.
pub fn write_csv<W: Write>(instances: &[ClaimInstance], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["claim_id", "m", "n", "t", "predicted", "observed", "status"])
        .map_err(csv_err)?;
    for i in instances {
        let id = match &i.detail {
            Some(d) => format!("{}({d})", i.claim_id),
            None => i.claim_id.clone(),
        };
        let m = i.bounds.first().map(u32::to_string).unwrap_or_default();
        let n = i.bounds.get(1).map(u32::to_string).unwrap_or_default();
        w.write_record([
            id,
            m,
            n,
            i.t.to_string(),
            i.predicted.to_string(),
            i.observed.to_string(),
            i.status.to_string(),
        ])
        .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn to_csv_string(instances: &[ClaimInstance]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(instances, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}
