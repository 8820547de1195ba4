#pragma once

#include <hyperend/exactalg/factor.hpp>
#include <hyperend/exactalg/integer.hpp>
#include <hyperend/exactalg/modpoly.hpp>
#include <hyperend/exactalg/polynomial.hpp>
#include <hyperend/exactalg/resultant.hpp>
#include <hyperend/exactalg/stem_field.hpp>
#include <hyperend/permgrp/group.hpp>
#include <hyperend/permgrp/permutation.hpp>
#include <hyperend/modrep/matrix.hpp>
#include <hyperend/modrep/module.hpp>
#include <hyperend/numfield/numfield.hpp>
#include <hyperend/numfield/validate.hpp>
#include <hyperend/galois/splitting_algebra.hpp>
#include <hyperend/galois/galois.hpp>
#include <hyperend/classify/report.hpp>
#include <hyperend/classify/classify.hpp>
#include <hyperend/corpus/corpus.hpp>
#include <hyperend/cli/cli.hpp>
