#include "lfc/function_spec.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "numfmt.hpp"

namespace lfc {

ParseError::ParseError(std::string_view source, std::size_t position, std::string expected)
    : std::runtime_error("cannot parse function spec '" + std::string(source) + "' at position " +
                         std::to_string(position) + ": expected " + expected),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    bool done() const { return pos_ == text_.size(); }

    bool accept(std::string_view token) {
        if (text_.substr(pos_, token.size()) != token)
            return false;
        pos_ += token.size();
        return true;
    }

    void expect(std::string_view token) {
        if (!accept(token))
            fail("'" + std::string(token) + "'");
    }

    double number(const char* what) {
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr == first)
            fail(what);
        if (!std::isfinite(v))
            fail(std::string("finite ") + what);
        pos_ += static_cast<std::size_t>(ptr - first);
        return v;
    }

    double grade() {
        const std::size_t at = pos_;
        const double k = number("grade");
        if (k < 0.0) {
            pos_ = at;
            fail("non-negative grade");
        }
        return k;
    }

    int count() {
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        int v = 0;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr == first || v < 1)
            fail("positive term count");
        pos_ += static_cast<std::size_t>(ptr - first);
        return v;
    }

    void finish() {
        if (!done())
            fail("end of input");
    }

    [[noreturn]] void fail(std::string expected) const {
        throw ParseError(text_, pos_, std::move(expected));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

FunctionSpec parse_function_spec(std::string_view text) {
    Parser in(text);
    FunctionSpec spec;
    spec.source = std::string(text);
    if (in.accept("mono:")) {
        spec.kind = FunctionSpec::Kind::Mono;
        spec.terms.push_back({in.grade(), 1.0});
    } else if (in.accept("poly:")) {
        spec.kind = FunctionSpec::Kind::Poly;
        double j = 0.0;
        do {
            spec.terms.push_back({j, in.number("coefficient")});
            j += 1.0;
        } while (in.accept(","));
    } else if (in.accept("series:")) {
        spec.kind = FunctionSpec::Kind::Series;
        do {
            in.expect("(");
            const double k = in.grade();
            in.expect(",");
            const double c = in.number("coefficient");
            in.expect(")");
            spec.terms.push_back({k, c});
        } while (in.accept(";"));
    } else if (in.accept("ml:")) {
        spec.kind = FunctionSpec::Kind::MittagLeffler;
        spec.ml_terms = in.count();
    } else {
        in.fail("one of 'mono:', 'poly:', 'series:', 'ml:'");
    }
    in.finish();
    return spec;
}

AlphaSeries FunctionSpec::to_series(const AlphaContext& ctx) const {
    if (kind != Kind::MittagLeffler)
        return AlphaSeries(ctx, terms);
    std::vector<Term> t;
    t.reserve(static_cast<std::size_t>(ml_terms));
    t.push_back({0.0, 1.0});
    for (int k = 1; k < ml_terms; ++k)
        t.push_back({static_cast<double>(k), std::exp(-log_gamma(1.0 + k * ctx.alpha()))});
    return AlphaSeries(ctx, std::move(t));
}

std::string FunctionSpec::format() const {
    std::string out;
    switch (kind) {
    case Kind::Mono:
        return "mono:" + detail::format_shortest(terms.at(0).grade);
    case Kind::Poly:
        out = "poly:";
        for (std::size_t j = 0; j < terms.size(); ++j)
            out += (j ? "," : "") + detail::format_shortest(terms[j].coeff);
        return out;
    case Kind::Series:
        out = "series:";
        for (std::size_t j = 0; j < terms.size(); ++j)
            out += (j ? ";(" : "(") + detail::format_shortest(terms[j].grade) + "," +
                   detail::format_shortest(terms[j].coeff) + ")";
        return out;
    case Kind::MittagLeffler:
        return "ml:" + std::to_string(ml_terms);
    }
    return out;
}

std::string format_series_spec(const AlphaSeries& f) {
    if (f.is_zero())
        return "poly:0";
    std::string out = "series:";
    for (std::size_t j = 0; j < f.terms().size(); ++j)
        out += (j ? ";(" : "(") + detail::format_shortest(f.terms()[j].grade) + "," +
               detail::format_shortest(f.terms()[j].coeff) + ")";
    return out;
}

}  // namespace lfc
