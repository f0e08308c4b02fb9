use std::io::Read;
use std::path::Path;

use foldkit::family::Family;
use foldkit::io::parse_graph;
use foldkit::{Error, Graph};

use crate::CliError;

/// Graph source: `--family` wins over a positional file, which wins over
/// stdin.
pub fn load_graph(family: Option<&str>, file: Option<&Path>) -> Result<Graph, CliError> {
    if let Some(name) = family {
        if file.is_some() {
            return Err(CliError::usage(
                "give either --family or an input file, not both",
            ));
        }
        let family: Family = name.parse()?;
        return Ok(family.generate()?);
    }
    let text = match file {
        Some(path) => read_file(path)?,
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::usage(format!("reading stdin: {e}")))?;
            s
        }
    };
    Ok(parse_graph(&text)?)
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("reading {}: {e}", path.display())))
}

/// `FOLDKIT_SIGMA_BOUND` overrides the fold-search size bound.
pub fn limits_from_env() -> Result<foldkit::Limits, CliError> {
    let mut limits = foldkit::Limits::default();
    if let Ok(v) = std::env::var("FOLDKIT_SIGMA_BOUND") {
        limits.sigma = v
            .trim()
            .parse()
            .map_err(|_| Error::Argument(format!("FOLDKIT_SIGMA_BOUND=`{v}` is not a number")))?;
    }
    Ok(limits)
}

pub fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::io(format!("writing {}: {e}", path.display())))
}
