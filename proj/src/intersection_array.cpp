#include "drg/intersection_array.hpp"

#include <cctype>
#include <sstream>

namespace drg {

namespace {

std::vector<long> parse_half(const std::string& part, const char* what) {
    std::vector<long> out;
    std::string tok;
    std::stringstream ss(part);
    while (std::getline(ss, tok, ',')) {
        size_t lo = tok.find_first_not_of(" \t");
        size_t hi = tok.find_last_not_of(" \t");
        if (lo == std::string::npos)
            throw ParseError(std::string("empty entry in ") + what);
        tok = tok.substr(lo, hi - lo + 1);
        for (char ch : tok)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw ParseError("non-numeric entry '" + tok + "'");
        errno = 0;
        long v = std::strtol(tok.c_str(), nullptr, 10);
        if (errno != 0) throw ParseError("entry out of range: " + tok);
        if (v <= 0) throw ParseError("non-positive entry: " + tok);
        out.push_back(v);
    }
    if (out.empty()) throw ParseError(std::string("missing ") + what);
    return out;
}

}  // namespace

IntersectionArray parse_array(const std::string& text) {
    size_t semi = text.find(';');
    if (semi == std::string::npos)
        throw ParseError("expected 'b0,...;c1,...' (missing ';')");
    if (text.find(';', semi + 1) != std::string::npos)
        throw ParseError("more than one ';'");

    IntersectionArray arr;
    arr.b = parse_half(text.substr(0, semi), "b-sequence");
    arr.c = parse_half(text.substr(semi + 1), "c-sequence");
    if (arr.b.size() != arr.c.size())
        throw ParseError("unequal halves: " + std::to_string(arr.b.size()) +
                         " b-entries vs " + std::to_string(arr.c.size()) +
                         " c-entries");
    if (arr.c.front() != 1) throw ParseError("c_1 must be 1");
    arr.D = static_cast<int>(arr.b.size());
    return arr;
}

std::string render(const IntersectionArray& arr) {
    std::ostringstream os;
    for (int i = 0; i < arr.D; ++i) os << (i ? "," : "") << arr.b[i];
    os << ";";
    for (int i = 0; i < arr.D; ++i) os << (i ? "," : "") << arr.c[i];
    return os.str();
}

DerivedParams derive(const IntersectionArray& arr) {
    for (int i = 0; i <= arr.D; ++i)
        if (arr.ai(i) < 0)
            throw InadmissibleArray("a_" + std::to_string(i) + " = " +
                                    std::to_string(arr.ai(i)) + " < 0 in {" +
                                    render(arr) + "}");
    DerivedParams d;
    d.a.resize(arr.D + 1);
    d.k_i.resize(arr.D + 1);
    d.k_i[0] = 1;
    d.v = 1;
    for (int i = 0; i <= arr.D; ++i) d.a[i] = arr.ai(i);
    for (int i = 0; i < arr.D; ++i) {
        d.k_i[i + 1] = d.k_i[i] * arr.bi(i) / arr.ci(i + 1);
        d.k_i[i + 1].canonicalize();
        d.v += d.k_i[i + 1];
    }
    d.v.canonicalize();
    return d;
}

}  // namespace drg
