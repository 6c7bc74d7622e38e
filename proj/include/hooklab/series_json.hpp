#ifndef HOOKLAB_SERIES_JSON_HPP
#define HOOKLAB_SERIES_JSON_HPP

#include <json.hpp>

#include <hooklab/series.hpp>

namespace hooklab
{

// {"vars": [...], "terms": [{"exp": [...], "num": "...", "den": "..."}]}
// with natural exponents in variable-table order.
inline nlohmann::json series_to_json(const MultiSeries &s)
{
    nlohmann::json out;
    out["vars"] = s.table()->names();
    auto terms = nlohmann::json::array();
    for (const auto &[m, c] : s.terms()) {
        terms.push_back({{"exp", s.table()->natural(m)}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    }
    out["terms"] = std::move(terms);
    return out;
}

inline MultiSeries series_from_json(const nlohmann::json &j, VarTablePtr table)
{
    if (j.at("vars").get<std::vector<std::string>>() != table->names()) {
        throw SeriesError("var-table-mismatch: JSON variables differ from the table");
    }
    std::vector<MultiSeries::Term> terms;
    for (const auto &t : j.at("terms")) {
        const auto nat = t.at("exp").get<std::vector<int>>();
        Rational c(mpz_class(t.at("num").get<std::string>()), mpz_class(t.at("den").get<std::string>()));
        c.canonicalize();
        terms.emplace_back(table->from_natural(nat), c);
    }
    return MultiSeries(std::move(table), std::move(terms));
}

inline nlohmann::json monomial_to_json(const VarTable &table, const Monomial &m)
{
    nlohmann::json out = nlohmann::json::object();
    const auto nat = table.natural(m);
    for (std::size_t i = 0; i < nat.size(); ++i) {
        if (nat[i] != 0) {
            out[table.name(i)] = nat[i];
        }
    }
    return out;
}

} // namespace hooklab

#endif
