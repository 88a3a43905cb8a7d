use std::fmt;
use std::path::Path;

use qcc_core::charclass::{extend_basic_table, BasicClassTable, BuildOptions, CharError, Strategy};
use qcc_core::hall::{HallError, Mode};
use qcc_core::quiver::{DimVector, Quiver, QuiverError};
use qcc_core::repalg::{RepError, RootCatalog};

use crate::GlobalOpts;

#[derive(Debug)]
pub enum CliError {
    /// Bad input: exit code 2.
    Usage(String),
    /// Anything else: exit code 3.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Internal(m) => f.write_str(m),
        }
    }
}

fn quiver_error_is_usage(e: &QuiverError) -> bool {
    matches!(
        e,
        QuiverError::Invalid(_)
            | QuiverError::NotDynkin(_)
            | QuiverError::NotTypeA
            | QuiverError::CycleDetected
            | QuiverError::DimensionMismatch(..)
            | QuiverError::Parse(_)
    )
}

impl From<QuiverError> for CliError {
    fn from(e: QuiverError) -> CliError {
        if quiver_error_is_usage(&e) {
            CliError::Usage(e.to_string())
        } else {
            CliError::Internal(e.to_string())
        }
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> CliError {
        match &e {
            RepError::Quiver(q) => q.clone().into(),
            RepError::NotARoot(_) | RepError::NonGenericZ(..) | RepError::InvalidZ(_) => CliError::Usage(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<HallError> for CliError {
    fn from(e: HallError) -> CliError {
        match e {
            HallError::Quiver(q) => q.into(),
            e => CliError::Internal(e.to_string()),
        }
    }
}

impl From<CharError> for CliError {
    fn from(e: CharError) -> CliError {
        match e {
            CharError::Quiver(q) => q.into(),
            CharError::Rep(r) => r.into(),
            CharError::Hall(h) => h.into(),
            e @ (CharError::NotARoot(_) | CharError::QuiverMismatch { .. } | CharError::Table(_)) => {
                CliError::Usage(e.to_string())
            }
            e => CliError::Internal(e.to_string()),
        }
    }
}

pub struct Context {
    pub opts: GlobalOpts,
    pub cat: RootCatalog,
}

impl Context {
    pub fn load(opts: &GlobalOpts) -> Result<Context, CliError> {
        let path = opts
            .quiver
            .as_ref()
            .ok_or_else(|| CliError::Usage("--quiver is required".into()))?;
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let q = Quiver::from_json(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let cat = RootCatalog::with_seed(&q, opts.seed)?;
        Ok(Context {
            opts: opts.clone(),
            cat,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.cat.quiver
    }

    /// Checks the length of `d` and the coordinate limit.
    pub fn check_dim(&self, d: &DimVector) -> Result<(), CliError> {
        self.quiver().check_dim(d)?;
        if d.max_coord() > self.opts.cutoff_limit {
            return Err(CliError::Usage(format!(
                "{d} has a coordinate above the limit {} (see --cutoff-limit)",
                self.opts.cutoff_limit
            )));
        }
        Ok(())
    }

    fn cached_table(&self) -> Result<BasicClassTable, CliError> {
        match &self.opts.table {
            Some(p) if Path::new(p).exists() => Ok(BasicClassTable::load(self.quiver(), p)?),
            _ => Ok(BasicClassTable::new(self.quiver())),
        }
    }

    /// The basic class table covering every root below one of `tops` (all
    /// roots when `tops` is `None`) in each of `modes`, read from and
    /// written back to the cache.
    pub fn table(
        &self,
        modes: &[Mode],
        tops: Option<Vec<DimVector>>,
        strategy: Strategy,
        use_inj: bool,
    ) -> Result<BasicClassTable, CliError> {
        let mut table = self.cached_table()?;
        let before: usize = modes.iter().map(|&m| table.len(m)).sum();
        let opts = BuildOptions {
            strategy,
            whitelist: tops,
            use_inj,
            seed: self.opts.seed,
            ..BuildOptions::default()
        };
        for &mode in modes {
            extend_basic_table(&self.cat, mode, &opts, &mut table)?;
        }
        let after: usize = modes.iter().map(|&m| table.len(m)).sum();
        if let Some(p) = &self.opts.table {
            if after != before || !p.exists() {
                table.save(p)?;
            }
        }
        Ok(table)
    }
}
