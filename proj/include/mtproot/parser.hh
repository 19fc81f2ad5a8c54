// parser.hh -- the input language for MTP expressions in x, sin(x), cos(x).

#ifndef MTPROOT_PARSER_HH
#define MTPROOT_PARSER_HH

#include <mtproot/mpoly.hh>

#include <stdexcept>
#include <string>

namespace mtproot {

struct parse_error : std::runtime_error {
    int line, column;
    parse_error(const std::string& msg, int l, int c)
        : std::runtime_error(msg + " at line " + std::to_string(l) +
                             ", column " + std::to_string(c)),
          line(l), column(c)
    {
    }
};

struct ParsedMTP {
    mpoly f; // y = sin x, z = cos x
    std::string source;
};

// expr  := ['-'] term (('+'|'-') term)*
// term  := ['-'] factor ('*' factor)*
// factor:= atom ['^' uint]
// atom  := rational | 'x' | 'sin' '(' 'x' ')' | 'cos' '(' 'x' ')' | '(' expr ')'
ParsedMTP parse_mtp(const std::string& text);

// Renders f back into the input language (round-trips through parse_mtp).
std::string mtp_to_input(const mpoly& f);

} // namespace mtproot

#endif
