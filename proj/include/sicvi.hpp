#ifndef SICVI_HPP
#define SICVI_HPP

/**
 * @file sicvi.hpp
 * @brief Umbrella header for the cluster-validity library.
 */

#include "sicvi/IndexResult.hpp"
#include "sicvi/Dataset.hpp"
#include "sicvi/Partition.hpp"
#include "sicvi/geometry.hpp"
#include "sicvi/Dendrogram.hpp"
#include "sicvi/synthetic.hpp"
#include "sicvi/simplicity.hpp"
#include "sicvi/classic.hpp"
#include "sicvi/indices.hpp"
#include "sicvi/properties.hpp"
#include "sicvi/io.hpp"

#endif
