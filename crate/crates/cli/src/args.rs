use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "prolate", version, about = "Exact checks for the Pascal-matrix eigenvector and its congruences")]
pub struct Cli {
    /// Worker threads for data-parallel work (default: available parallelism).
    #[arg(long, global = true, env = "PROLATE_THREADS", value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the eigenvalue-one eigenvector of T_N and its generating polynomial.
    Eigvec {
        #[arg(long)]
        n: usize,
    },
    /// Run an exact verification suite over a range of N.
    Verify(VerifyArgs),
    /// Count points on Legendre curves y^2 = x(x-1)(x-z) over F_p.
    Curve {
        #[arg(long)]
        p: u64,
        #[arg(long, conflicts_with = "sweep", required_unless_present = "sweep")]
        z: Option<u64>,
        /// All z = 2..p-1 in ascending order.
        #[arg(long)]
        sweep: bool,
    },
    /// Run the mod-p congruence checks at N = p - 1.
    Congruence {
        #[arg(long)]
        p: u64,
    },
    /// Check U_n(pt) against the squared period series mod p^n for t = 1..samples.
    Padic {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value_t = 10)]
        samples: u32,
    },
    /// Compare the numeric contour integral with f(v; z) on |z - 1| = 1/2.
    Integral {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        samples: u32,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 0)]
    pub n_min: usize,
    #[arg(long)]
    pub n_max: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Pascal,
    Jacobi,
    Binomial,
    Cholesky,
    Ode,
    SymmetricSquare,
    Gensoln,
    Helper,
    FunctionalEq,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Pascal => "pascal",
            Suite::Jacobi => "jacobi",
            Suite::Binomial => "binomial",
            Suite::Cholesky => "cholesky",
            Suite::Ode => "ode",
            Suite::SymmetricSquare => "symmetric-square",
            Suite::Gensoln => "gensoln",
            Suite::Helper => "helper",
            Suite::FunctionalEq => "functional-eq",
        }
    }

    /// Suites whose statements only make sense for even N.
    pub fn even_only(self) -> bool {
        !matches!(self, Suite::Binomial | Suite::Cholesky | Suite::FunctionalEq)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn command_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn suite_names_match_value_names() {
        for s in Suite::value_variants() {
            assert_eq!(s.to_possible_value().unwrap().get_name(), s.name());
        }
    }

    #[test]
    fn global_flags_parse_after_subcommand() {
        let cli = Cli::try_parse_from(["prolate", "curve", "--p", "5", "--sweep", "--threads", "2", "--format", "csv"])
            .unwrap();
        assert_eq!(cli.threads, Some(2));
        assert_eq!(cli.format, Format::Csv);
        assert!(Cli::try_parse_from(["prolate", "--threads", "0", "eigvec", "--n", "2"]).is_err());
    }
}
