//! Checkpoint files for resumable enumerations.
//!
//! Line 1 is `# ` followed by the enumeration bounds as JSON; every further
//! line is one canonical key in hex, sorted ascending, LF-terminated.

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::generate::canon::CanonicalForm;
use crate::generate::enumerate::EnumSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub spec: EnumSpec,
    pub done: BTreeSet<CanonicalForm>,
}

impl Checkpoint {
    pub fn new(spec: EnumSpec) -> Self {
        Checkpoint {
            spec,
            done: BTreeSet::new(),
        }
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "# {}\n",
            serde_json::to_string(&self.spec).expect("spec is serializable")
        );
        for key in &self.done {
            out.push_str(&key.to_hex());
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .and_then(|l| l.strip_prefix("# "))
            .ok_or_else(|| Error::Syntax {
                line: 1,
                message: "checkpoint must start with `# <spec json>`".into(),
            })?;
        let spec: EnumSpec = serde_json::from_str(header)?;
        let mut done = BTreeSet::new();
        for (i, line) in lines.enumerate() {
            let key = CanonicalForm::from_hex(line.trim()).map_err(|_| Error::Syntax {
                line: i + 2,
                message: format!("bad key `{line}`"),
            })?;
            done.insert(key);
        }
        Ok(Checkpoint { spec, done })
    }

    pub fn load(path: &Path) -> Result<Option<Self>> {
        match fs::read_to_string(path) {
            Ok(text) => Self::parse(&text).map(Some),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    /// Writes to a sibling temporary file and renames it into place.
    pub fn store(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(self.render().as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }
}
