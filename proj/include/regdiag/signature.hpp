#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace regdiag {

// A one-sorted signature: function symbols with arities (constants have
// arity 0) and predicate symbols with arities. Symbol names are disjoint
// between the two kinds only per-kind; the same name may appear as both a
// function and a predicate, with textual references disambiguated by
// writing name@fun or name@pred.
class Signature {
public:
    void add_fun(const std::string& name, int arity);
    void add_pred(const std::string& name, int arity);

    bool has_fun(const std::string& name) const { return funs_.count(name) > 0; }
    bool has_pred(const std::string& name) const { return preds_.count(name) > 0; }

    // Throws SignatureError when absent.
    int fun_arity(const std::string& name) const;
    int pred_arity(const std::string& name) const;

    // Declaration order, used wherever enumeration order matters.
    const std::vector<std::string>& fun_names() const { return fun_order_; }
    const std::vector<std::string>& pred_names() const { return pred_order_; }

    // Parses {"functions": {"f": 1, ...}, "predicates": {"P": 2, ...}}.
    static Signature from_json_text(const std::string& text);
    static Signature from_file(const std::string& path);
    std::string to_json_text() const;

private:
    std::map<std::string, int> funs_;
    std::map<std::string, int> preds_;
    std::vector<std::string> fun_order_;
    std::vector<std::string> pred_order_;
};

} // namespace regdiag
