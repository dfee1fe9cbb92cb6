#include "regdiag/signature.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "regdiag/errors.hpp"

namespace regdiag {

using nlohmann::json;

void Signature::add_fun(const std::string& name, int arity) {
    if (arity < 0) throw SignatureError("negative arity for function " + name);
    if (name.empty()) throw SignatureError("empty function name");
    if (!funs_.emplace(name, arity).second)
        throw SignatureError("duplicate function symbol: " + name);
    fun_order_.push_back(name);
}

void Signature::add_pred(const std::string& name, int arity) {
    if (arity < 0) throw SignatureError("negative arity for predicate " + name);
    if (name.empty()) throw SignatureError("empty predicate name");
    if (!preds_.emplace(name, arity).second)
        throw SignatureError("duplicate predicate symbol: " + name);
    pred_order_.push_back(name);
}

int Signature::fun_arity(const std::string& name) const {
    auto it = funs_.find(name);
    if (it == funs_.end()) throw SignatureError("unknown function symbol: " + name);
    return it->second;
}

int Signature::pred_arity(const std::string& name) const {
    auto it = preds_.find(name);
    if (it == preds_.end()) throw SignatureError("unknown predicate symbol: " + name);
    return it->second;
}

Signature Signature::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("signature JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("signature JSON: expected object");
    Signature sig;
    if (j.contains("functions")) {
        if (!j["functions"].is_object())
            throw ParseError("signature JSON: \"functions\" must be an object");
        for (auto& [k, v] : j["functions"].items()) {
            if (!v.is_number_integer())
                throw ParseError("signature JSON: arity of " + k + " must be an integer");
            sig.add_fun(k, v.get<int>());
        }
    }
    if (j.contains("predicates")) {
        if (!j["predicates"].is_object())
            throw ParseError("signature JSON: \"predicates\" must be an object");
        for (auto& [k, v] : j["predicates"].items()) {
            if (!v.is_number_integer())
                throw ParseError("signature JSON: arity of " + k + " must be an integer");
            sig.add_pred(k, v.get<int>());
        }
    }
    return sig;
}

Signature Signature::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open signature file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string Signature::to_json_text() const {
    json j;
    j["functions"] = json::object();
    j["predicates"] = json::object();
    for (const auto& n : fun_order_) j["functions"][n] = funs_.at(n);
    for (const auto& n : pred_order_) j["predicates"][n] = preds_.at(n);
    return j.dump(2);
}

} // namespace regdiag
