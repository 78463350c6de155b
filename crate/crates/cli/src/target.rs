//! Resolution of a command-line target to a diagram.

use std::path::Path;

use log::debug;
use reeder_core::dsl::parse_diagram;
use reeder_core::families::{construct, FamilySpec};
use reeder_core::Diagram;

use crate::error::CliError;

pub struct Target {
    pub diagram: Diagram,
    /// Set when the target named a family member.
    pub spec: Option<FamilySpec>,
}

impl Target {
    pub fn label(&self) -> String {
        match (&self.spec, self.diagram.name()) {
            (Some(s), _) => s.to_string(),
            (None, Some(name)) => name.to_string(),
            (None, None) => "diagram".to_string(),
        }
    }
}

/// An existing file is read as a diagram description; anything else is
/// parsed as a family string.
pub fn resolve(arg: &str) -> Result<Target, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        debug!("reading diagram file {arg}");
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(format!("reading {arg}"), e))?;
        let diagram = parse_diagram(&text).map_err(|e| CliError::Input(format!("{arg}: {e}")))?;
        let name = path.file_stem().map_or_else(|| arg.to_string(), |s| s.to_string_lossy().into_owned());
        return Ok(Target {
            diagram: diagram.with_name(name),
            spec: None,
        });
    }
    let spec: FamilySpec = arg
        .parse()
        .map_err(|e| CliError::Input(format!("{arg:?} is neither a file nor a family: {e}")))?;
    debug!("constructing {spec}");
    Ok(Target {
        diagram: construct(&spec)?,
        spec: Some(spec),
    })
}
