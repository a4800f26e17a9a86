#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gapseq/sequences.hpp"

namespace gapseq::cli {

class SpecSyntaxError : public std::invalid_argument {
public:
    SpecSyntaxError(const std::string& what, std::size_t pos);
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Grammar:
///   linear:K,R | geom:K[,OFFSET] | poly:C0,C1,... | binom:SHIFT,LOWER
///   | horadam:A,B,R,S[,SHIFT] | primes | fold | explicit:T0,T1,...
///   | fib | jacobsthal | pell
/// Throws SpecSyntaxError (with position) or InvalidSpec.
SeqSpec parse_spec(std::string_view text);

/// Help text for the grammar, printed on usage errors.
std::string spec_grammar_help();

enum class ExitCode : int { ok = 0, mismatch = 1, usage = 2 };

/// Runs one subcommand. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gapseq::cli
