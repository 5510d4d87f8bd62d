#pragma once

// Command-line surface: subcommands gamma, trig, identity, period, verify,
// representer, bridge, errata.  Tables go to stdout as CSV (17 significant
// digits, '\n' endings, header always); verification-style subcommands
// print key: value reports.  Exit codes: 0 success/pass, 1 verification or
// runtime math failure, 2 usage or parse error.  Every failure path prints
// a single line to stderr prefixed "error:".

namespace pairable::cli {

int run(int argc, char** argv);

}  // namespace pairable::cli
