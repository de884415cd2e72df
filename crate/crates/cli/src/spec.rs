use linetw_core::MultipartiteSpec;

use crate::CliError;

/// Parses `"n1,n2,..."` into a spec. With `single_is_complete`, a lone
/// number `n` means `K_n` rather than the edgeless `K_{n}`.
pub fn parse_spec(text: &str, single_is_complete: bool) -> Result<MultipartiteSpec, CliError> {
    let parts = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad spec {text:?}: expected comma-separated positive integers")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let spec = if single_is_complete && parts.len() == 1 {
        MultipartiteSpec::complete(parts[0])
    } else {
        MultipartiteSpec::new(parts)
    };
    spec.map_err(|e| CliError::Usage(format!("bad spec {text:?}: {e}")))
}

pub fn format_spec(spec: &MultipartiteSpec) -> String {
    spec.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}
