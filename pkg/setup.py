import setuptools

setuptools.setup(
    packages=setuptools.find_packages(exclude=["devel"]),
    include_package_data=True,
    scripts=[
        "bin/qbc"
    ],
    install_requires=[
        "click",
        "simplejson",
        "numpy",
        "jinjaroot"
    ],
    extras_require={
        "test": [
            "pytest",
            "hypothesis"
        ]
    }
)
